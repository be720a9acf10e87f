//! Brute-force oracles shared by the integration tests. None of these call
//! into the crate's factorization, counting or permutation code.

#![allow(dead_code)]

/// Every word of length exactly `len` over letters `1..=k`, in lexicographic order.
pub fn words_of_length(k: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=k).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

fn rotations(w: &[u8]) -> Vec<Vec<u8>> {
    (0..w.len())
        .map(|i| w[i..].iter().chain(&w[..i]).copied().collect())
        .collect()
}

/// Primitive and strictly smaller than each of its other rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && rotations(w).iter().skip(1).all(|r| w < r.as_slice())
}

/// All ways to cut `w` into Lyndon words `l_1 >= l_2 >= ...`.
pub fn all_lyndon_decompositions(w: &[u8]) -> Vec<Vec<Vec<u8>>> {
    fn rec(
        rest: &[u8],
        previous: Option<&[u8]>,
        acc: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for cut in 1..=rest.len() {
            let head = &rest[..cut];
            if !is_lyndon(head) || previous.is_some_and(|p| head > p) {
                continue;
            }
            acc.push(head.to_vec());
            rec(&rest[cut..], Some(head), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, None, &mut Vec::new(), &mut out);
    out
}

/// The split `l = r s` into two Lyndon words with `s` longest.
pub fn standard_factorization(l: &[u8]) -> Option<(Vec<u8>, Vec<u8>)> {
    (1..l.len())
        .find(|&cut| is_lyndon(&l[..cut]) && is_lyndon(&l[cut..]))
        .map(|cut| (l[..cut].to_vec(), l[cut..].to_vec()))
}

pub fn content(w: &[u8], k: usize) -> Vec<usize> {
    let mut c = vec![0; k];
    for &a in w {
        c[a as usize - 1] += 1;
    }
    c
}

/// Number of Lyndon words with content `m`, by filtering all words.
pub fn lyndon_count_by_enumeration(m: &[usize]) -> u64 {
    let n: usize = m.iter().sum();
    words_of_length(m.len() as u8, n)
        .iter()
        .filter(|w| content(w, m.len()) == m && is_lyndon(w))
        .count() as u64
}

/// All permutations of `1..=n` as one-line vectors, by recursive insertion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = p[v] - 1;
        }
    }
    count
}

/// `c(n, k)` by sweeping `S_n`.
pub fn stirling_by_sweep(n: usize, k: usize) -> u64 {
    permutations(n)
        .iter()
        .filter(|p| cycle_count(p) == k)
        .count() as u64
}
