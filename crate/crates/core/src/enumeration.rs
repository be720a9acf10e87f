//! Exhaustive generation of multiset permutations and the counting layer
//! built on it: parity census, coin-arrangement numbers `b_{N,k}`, their
//! alternating sum and the Stirling cycle specialization.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;
use crate::lyndon::lyndon_tuple;
use crate::words::{conjugates, content, is_primitive, ContentVector, Letter, MultisetSpec, Word};

/// Steps `items` to the next arrangement in lexicographic order. Returns
/// `false`, leaving `items` sorted ascending, after the last one.
pub fn next_arrangement<T: Ord>(items: &mut [T]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Lexicographic stream of the permutations of a multiset.
#[derive(Debug, Clone)]
pub struct MultisetWords {
    current: Vec<Letter>,
    done: bool,
}

impl Iterator for MultisetWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word::new(self.current.clone());
        self.done = !next_arrangement(&mut self.current);
        Some(out)
    }
}

/// Every permutation of `m` exactly once, in lexicographic order.
pub fn words_of(m: &MultisetSpec) -> Result<MultisetWords> {
    if m.cardinality() == 0 {
        return Err(Error::EmptyMultiset);
    }
    let current = m
        .multiplicities()
        .iter()
        .enumerate()
        .flat_map(|(i, &count)| std::iter::repeat_n((i + 1) as Letter, count))
        .collect();
    Ok(MultisetWords {
        current,
        done: false,
    })
}

/// Classification of the permutations of a multiset by Lyndon tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityCensus {
    pub multiset: MultisetSpec,
    #[serde(rename = "N")]
    pub cardinality: usize,
    #[serde(serialize_with = "json::big")]
    pub even: BigUint,
    #[serde(serialize_with = "json::big")]
    pub odd: BigUint,
    /// Words whose factorization repeats a Lyndon factor.
    #[serde(serialize_with = "json::big")]
    pub excluded: BigUint,
    /// Tuple length `k` to number of words; these are the `b_{N,k}`.
    #[serde(serialize_with = "json::big_map")]
    pub by_k: BTreeMap<usize, BigUint>,
    #[serde(serialize_with = "json::big")]
    pub alternating_sum: BigInt,
}

#[derive(Default)]
struct Counts {
    even: u64,
    odd: u64,
    excluded: u64,
    by_k: BTreeMap<usize, u64>,
}

impl Counts {
    fn add(mut self, other: Counts) -> Counts {
        self.even += other.even;
        self.odd += other.odd;
        self.excluded += other.excluded;
        for (k, c) in other.by_k {
            *self.by_k.entry(k).or_default() += c;
        }
        self
    }
}

impl ParityCensus {
    /// `b_{N,k}`; zero when no word has a tuple of length `k`.
    pub fn b(&self, k: usize) -> BigUint {
        self.by_k.get(&k).cloned().unwrap_or_default()
    }

    pub fn balanced(&self) -> bool {
        self.even == self.odd
    }
}

/// Classifies every permutation of `m` as even, odd or excluded.
pub fn parity_census(m: &MultisetSpec) -> Result<ParityCensus> {
    let counts = words_of(m)?
        .par_bridge()
        .fold(Counts::default, |mut acc, w| {
            match lyndon_tuple(&w) {
                Ok(t) => {
                    if t.index() % 2 == 0 {
                        acc.even += 1;
                    } else {
                        acc.odd += 1;
                    }
                    *acc.by_k.entry(t.k()).or_default() += 1;
                }
                Err(_) => acc.excluded += 1,
            }
            acc
        })
        .reduce(Counts::default, Counts::add);
    let by_k: BTreeMap<usize, BigUint> = counts
        .by_k
        .into_iter()
        .map(|(k, c)| (k, BigUint::from(c)))
        .collect();
    let alternating_sum = signed_sum(&by_k);
    Ok(ParityCensus {
        multiset: m.clone(),
        cardinality: m.cardinality(),
        even: counts.even.into(),
        odd: counts.odd.into(),
        excluded: counts.excluded.into(),
        by_k,
        alternating_sum,
    })
}

fn signed_sum(by_k: &BTreeMap<usize, BigUint>) -> BigInt {
    by_k.iter().fold(BigInt::zero(), |acc, (&k, b)| {
        let b = BigInt::from(b.clone());
        if k % 2 == 0 {
            acc + b
        } else {
            acc - b
        }
    })
}

/// Number of ways to arrange `m` into `k` distinct aperiodic necklaces,
/// counted as the permutations of `m` whose Lyndon tuple has length `k`.
pub fn b_count(m: &MultisetSpec, k: usize) -> Result<BigUint> {
    if k == 0 || k > m.cardinality() {
        return Ok(BigUint::zero());
    }
    Ok(parity_census(m)?.b(k))
}

/// `sum_k (-1)^k b_{N,k}`.
pub fn alternating_sum(m: &MultisetSpec) -> Result<BigInt> {
    Ok(parity_census(m)?.alternating_sum)
}

/// Aperiodic necklaces with content below `m`, each as its least rotation,
/// found by filtering words through rotation comparisons only.
fn aperiodic_necklaces(m: &MultisetSpec) -> Vec<(Word, ContentVector)> {
    let alphabet = m.alphabet();
    let bounds: Vec<std::ops::RangeInclusive<usize>> =
        m.multiplicities().iter().map(|&c| 0..=c).collect();
    let mut out = Vec::new();
    let mut sub = vec![0; bounds.len()];
    loop {
        if sub.iter().sum::<usize>() > 0 {
            let part = MultisetSpec::new(alphabet, sub.clone()).expect("same alphabet");
            for w in words_of(&part).expect("non-empty") {
                if !is_primitive(&w).expect("non-empty") {
                    continue;
                }
                let least = conjugates(&w)
                    .expect("non-empty")
                    .into_iter()
                    .min()
                    .expect("non-empty");
                if least == w {
                    let c = content(&w, alphabet);
                    out.push((w, c));
                }
            }
        }
        // odometer over the sub-multiplicity box
        let mut i = 0;
        loop {
            if i == sub.len() {
                return out;
            }
            if sub[i] < *bounds[i].end() {
                sub[i] += 1;
                break;
            }
            sub[i] = 0;
            i += 1;
        }
    }
}

/// Independent count of `b_{N,k}`: the number of `k`-element sets of
/// distinct aperiodic necklaces whose contents add up to `m`. Uses no
/// Lyndon factorization code.
pub fn b_count_oracle(m: &MultisetSpec, k: usize) -> BigUint {
    if k == 0 || k > m.cardinality() {
        return BigUint::zero();
    }
    let necklaces = aperiodic_necklaces(m);

    fn choose(
        necklaces: &[(Word, ContentVector)],
        start: usize,
        remaining: &mut [usize],
        left: usize,
    ) -> BigUint {
        if left == 0 {
            return if remaining.iter().all(|&r| r == 0) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let mut total = BigUint::zero();
        for i in start..necklaces.len() {
            let counts = necklaces[i].1.counts();
            if counts.iter().zip(remaining.iter()).any(|(c, r)| c > r) {
                continue;
            }
            for (r, c) in remaining.iter_mut().zip(counts) {
                *r -= c;
            }
            total += choose(necklaces, i + 1, remaining, left - 1);
            for (r, c) in remaining.iter_mut().zip(counts) {
                *r += c;
            }
        }
        total
    }

    let mut remaining = m.multiplicities().to_vec();
    choose(&necklaces, 0, &mut remaining, k)
}

/// Unsigned Stirling number of the first kind, `c(n, k)`.
pub fn stirling_cycle(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] = c(i, j)
    let mut row = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::one();
    for i in 1..=n {
        for j in (1..=i).rev() {
            let carried = &row[j] * BigUint::from(i - 1);
            row[j] = &row[j - 1] + carried;
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}
