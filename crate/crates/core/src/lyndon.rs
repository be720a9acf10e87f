//! Lyndon words, the Chen–Fox–Lyndon factorization and Lyndon tuples.
//!
//! A word with a Lyndon factorization `l_h ... l_1` whose factors are pairwise
//! distinct carries a [`LyndonTuple`]: the same factors listed in strictly
//! increasing order. Its Lyndon index `N - k` plays the role that the cycle
//! index plays for permutations, and its parity splits the words of a
//! multiset into even and odd classes.

use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Distinct Lyndon words `l_1 < l_2 < ... < l_k`, stored increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LyndonTuple {
    factors: Vec<Word>,
}

impl LyndonTuple {
    /// Validates that `factors` are Lyndon words in strictly increasing
    /// lexicographic order.
    pub fn new(factors: Vec<Word>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidTuple("no factors".into()));
        }
        for f in &factors {
            if !is_lyndon(f)? {
                return Err(Error::InvalidTuple(format!("{f} is not a Lyndon word")));
            }
        }
        if let Some(pair) = factors.windows(2).find(|p| p[0] >= p[1]) {
            return Err(Error::InvalidTuple(format!(
                "{} does not precede {}",
                pair[0], pair[1]
            )));
        }
        Ok(LyndonTuple { factors })
    }

    pub(crate) fn new_unchecked(factors: Vec<Word>) -> Self {
        debug_assert!(LyndonTuple::new(factors.clone()).is_ok());
        LyndonTuple { factors }
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn total_length(&self) -> usize {
        self.factors.iter().map(Word::len).sum()
    }

    /// `N - k`.
    pub fn index(&self) -> usize {
        self.total_length() - self.k()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.index())
    }
}

impl fmt::Display for LyndonTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{factor}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for LyndonTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Duval's scan: the factor ranges of the Lyndon factorization of `s`,
/// left to right.
fn duval(s: &[Letter]) -> Vec<Range<usize>> {
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(i..i + period);
            i += period;
        }
    }
    out
}

/// Whether `w` is a Lyndon word: primitive and strictly smallest among its
/// rotations (equivalently, strictly smaller than each proper suffix).
pub fn is_lyndon(w: &Word) -> Result<bool> {
    w.non_empty()?;
    let ranges = duval(w.letters());
    Ok(ranges.len() == 1)
}

/// The unique factorization `w = l_1 l_2 ... l_h` into Lyndon words with
/// `l_1 >= l_2 >= ... >= l_h`. Linear in `|w|`.
pub fn cfl_factorization(w: &Word) -> Result<Vec<Word>> {
    w.non_empty()?;
    Ok(duval(w.letters())
        .into_iter()
        .map(|r| Word::from(&w.letters()[r]))
        .collect())
}

/// The standard factorization `(r, s)` of a Lyndon word of length at least 2:
/// `s` is its longest proper Lyndon suffix, which is also its smallest
/// proper suffix.
pub fn standard_factorization(l: &Word) -> Result<(Word, Word)> {
    if !is_lyndon(l)? {
        return Err(Error::NotLyndon(l.to_string()));
    }
    if l.len() == 1 {
        return Err(Error::SingleLetter(l.to_string()));
    }
    let letters = l.letters();
    let split = (1..letters.len())
        .min_by(|&a, &b| letters[a..].cmp(&letters[b..]))
        .expect("length >= 2");
    Ok((Word::from(&letters[..split]), Word::from(&letters[split..])))
}

/// The Lyndon tuple of `w`, or `NonDistinctFactors` when its factorization
/// repeats a factor.
pub fn lyndon_tuple(w: &Word) -> Result<LyndonTuple> {
    let mut factors = cfl_factorization(w)?;
    if let Some(pair) = factors.windows(2).find(|p| p[0] == p[1]) {
        return Err(Error::NonDistinctFactors {
            word: w.to_string(),
            repeated: pair[0].to_string(),
        });
    }
    factors.reverse();
    Ok(LyndonTuple::new_unchecked(factors))
}

/// Concatenates the factors in decreasing order, `l_k ... l_1`.
pub fn tuple_to_word(t: &LyndonTuple) -> Word {
    let letters: Vec<Letter> = t
        .factors()
        .iter()
        .rev()
        .flat_map(|f| f.letters().iter().copied())
        .collect();
    Word::new(letters)
}

pub fn lyndon_index(w: &Word) -> Result<usize> {
    Ok(lyndon_tuple(w)?.index())
}

pub fn parity(w: &Word) -> Result<Parity> {
    Ok(lyndon_tuple(w)?.parity())
}
