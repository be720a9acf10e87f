//! Permutations of `{1, ..., n}`: cycle decomposition, cycle index,
//! inversions and the even/odd census of `S_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::enumeration::next_arrangement;
use crate::error::{Error, Result};

/// One-line form `τ(1) τ(2) ... τ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `τ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize], compact: bool) -> fmt::Result {
    for (i, v) in items.iter().enumerate() {
        if i > 0 && !compact {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.images, self.n() <= 9)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut images = Vec::new();
        if s.contains(',') {
            let mut position = 0;
            for field in s.split(',') {
                let v = field.trim().parse::<usize>().map_err(|_| {
                    Error::parse(
                        position,
                        format!("expected a value, found {:?}", field.trim()),
                    )
                })?;
                images.push(v);
                position += field.len() + 1;
            }
        } else {
            for (position, c) in s.char_indices() {
                let d = c.to_digit(10).ok_or_else(|| {
                    Error::parse(position, format!("expected a digit, found {c:?}"))
                })?;
                images.push(d as usize);
            }
        }
        Permutation::new(images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Disjoint cycles, each starting at its minimum, sorted by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Accepts cycles in any rotation and order and canonicalizes them.
    pub fn new(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut canonical = Vec::with_capacity(cycles.len());
        for mut cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: "empty cycle".into(),
                });
            }
            for &v in &cycle {
                if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                    return Err(Error::InvalidPermutation {
                        n,
                        reason: format!("cycles do not partition 1..={n} at {v}"),
                    });
                }
            }
            let min_at = (0..cycle.len())
                .min_by_key(|&i| cycle[i])
                .expect("non-empty");
            cycle.rotate_left(min_at);
            canonical.push(cycle);
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPermutation {
                n,
                reason: format!("{} is in no cycle", missing + 1),
            });
        }
        canonical.sort_by_key(|c| c[0]);
        Ok(CycleDecomposition {
            n,
            cycles: canonical,
        })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut images = vec![0; self.n];
        for cycle in &self.cycles {
            for (i, &v) in cycle.iter().enumerate() {
                images[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            write_list(f, cycle, self.n <= 9)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for CycleDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn cycles(t: &Permutation) -> CycleDecomposition {
    let n = t.n();
    let mut visited = vec![false; n];
    let mut out = Vec::new();
    for start in 1..=n {
        if visited[start - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !visited[v - 1] {
            visited[v - 1] = true;
            cycle.push(v);
            v = t.apply(v);
        }
        out.push(cycle);
    }
    // starts are visited in increasing order, so the form is already canonical
    CycleDecomposition { n, cycles: out }
}

/// `n - k` for a permutation with `k` cycles.
pub fn cycle_index(t: &Permutation) -> usize {
    t.n() - cycles(t).k()
}

pub fn inversions(t: &Permutation) -> usize {
    let im = t.images();
    (0..im.len())
        .map(|i| im[i + 1..].iter().filter(|&&b| im[i] > b).count())
        .sum()
}

/// Every permutation of `{1, ..., n}` in lexicographic order of one-line form.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let images = current.take()?;
        let mut next = images.clone();
        if next_arrangement(&mut next) {
            current = Some(next);
        }
        Some(Permutation { images })
    })
}

/// Numbers of permutations of `S_n` with even and odd cycle index.
pub fn even_odd_counts(n: usize) -> (BigUint, BigUint) {
    let (mut even, mut odd) = (0u64, 0u64);
    for t in all_permutations(n) {
        if cycle_index(&t).is_multiple_of(2) {
            even += 1;
        } else {
            odd += 1;
        }
    }
    (even.into(), odd.into())
}
