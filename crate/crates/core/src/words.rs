//! Ordered alphabets, multisets, words and the lexicographic order.
//!
//! Letters are ranks `1..=n` of an ordered alphabet, so the order on letters
//! is the order on integers. A [`Word`] is a plain sequence of ranks; its
//! derived `Ord` is the lexicographic order in which a proper prefix sorts
//! before every extension of it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter, identified with its rank in the alphabet.
pub type Letter = u8;

/// Largest alphabet representable with [`Letter`].
pub const MAX_ALPHABET: usize = Letter::MAX as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(Error::AlphabetSize {
                got: size,
                max: MAX_ALPHABET,
            });
        }
        Ok(Alphabet { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter >= 1 && (letter as usize) <= self.size
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.size).map(|r| r as Letter)
    }

    /// Checks that every letter of `word` belongs to this alphabet.
    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&a| !self.contains(a)) {
            Some(&a) => Err(Error::LetterOutOfRange {
                letter: a as u32,
                size: self.size,
            }),
            None => Ok(()),
        }
    }
}

/// A finite word over an ordered alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Rotation starting at `offset`, i.e. `w[offset..] w[..offset]`.
    pub fn rotation(&self, offset: usize) -> Word {
        let mut letters = self.0[offset..].to_vec();
        letters.extend_from_slice(&self.0[..offset]);
        Word(letters)
    }

    pub(crate) fn non_empty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(())
        }
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

/// Digits when every letter is at most 9, a comma separated rank list
/// otherwise. A single letter above 9 gets a trailing comma (`10,`) so it
/// does not read back as two digits. The empty word prints as the empty
/// string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for &a in &self.0 {
                write!(f, "{a}")?;
            }
        } else {
            for (i, &a) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            if self.0.len() == 1 {
                f.write_str(",")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse(0, "empty word"));
        }
        let mut letters = Vec::new();
        if s.contains(',') {
            let mut position = 0;
            let s = s.strip_suffix(',').unwrap_or(s);
            for field in s.split(',') {
                letters.push(parse_rank(field, position)?);
                position += field.len() + 1;
            }
        } else {
            for (position, c) in s.char_indices() {
                match c.to_digit(10) {
                    Some(d) if d >= 1 => letters.push(d as Letter),
                    _ => {
                        return Err(Error::parse(
                            position,
                            format!("expected a letter rank 1-9, found {c:?}"),
                        ))
                    }
                }
            }
        }
        Ok(Word(letters))
    }
}

fn parse_rank(field: &str, position: usize) -> Result<Letter> {
    let trimmed = field.trim();
    match trimmed.parse::<usize>() {
        Ok(r) if (1..=MAX_ALPHABET).contains(&r) => Ok(r as Letter),
        _ => Err(Error::parse(
            position,
            format!("expected a letter rank 1-{MAX_ALPHABET}, found {trimmed:?}"),
        )),
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Per-letter occurrence counts; the exponent vector of a weight monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ContentVector {
    counts: Vec<usize>,
}

impl ContentVector {
    pub fn new(counts: Vec<usize>) -> Self {
        ContentVector { counts }
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        ContentVector {
            counts: vec![0; alphabet.size()],
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl Add for &ContentVector {
    type Output = ContentVector;

    fn add(self, rhs: &ContentVector) -> ContentVector {
        assert_eq!(
            self.counts.len(),
            rhs.counts.len(),
            "content length mismatch"
        );
        ContentVector {
            counts: self
                .counts
                .iter()
                .zip(&rhs.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A multiset `[1^m1, 2^m2, ..., n^mn]` over an ordered alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultisetSpec {
    alphabet: Alphabet,
    multiplicities: Vec<usize>,
}

impl MultisetSpec {
    pub fn new(alphabet: Alphabet, multiplicities: Vec<usize>) -> Result<Self> {
        if multiplicities.len() != alphabet.size() {
            return Err(Error::MultiplicityCount {
                expected: alphabet.size(),
                got: multiplicities.len(),
            });
        }
        Ok(MultisetSpec {
            alphabet,
            multiplicities,
        })
    }

    /// Builds a multiset over the alphabet `1..=multiplicities.len()`.
    pub fn from_multiplicities(multiplicities: Vec<usize>) -> Result<Self> {
        let alphabet = Alphabet::new(multiplicities.len())?;
        Self::new(alphabet, multiplicities)
    }

    /// The multiset `[1^1, ..., n^1]`, i.e. the set `{1, ..., n}`.
    pub fn set(n: usize) -> Result<Self> {
        Self::from_multiplicities(vec![1; n])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn cardinality(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn as_content(&self) -> ContentVector {
        ContentVector::new(self.multiplicities.clone())
    }

    /// Whether `word` is a permutation of this multiset.
    pub fn admits(&self, word: &Word) -> bool {
        self.alphabet.check(word).is_ok() && content(word, self.alphabet) == self.as_content()
    }

    /// Every multiset over alphabets of size `1..=max_letters` with cardinality
    /// in `cardinalities` in which each letter occurs, in a fixed order.
    pub fn all_with(
        max_letters: usize,
        cardinalities: std::ops::RangeInclusive<usize>,
    ) -> Vec<MultisetSpec> {
        let mut out = Vec::new();
        for letters in 1..=max_letters {
            for total in cardinalities.clone() {
                for counts in compositions(total, letters) {
                    if counts.contains(&0) {
                        continue;
                    }
                    if let Ok(m) = MultisetSpec::from_multiplicities(counts) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }
}

/// All vectors of `parts` non-negative integers summing to `total`, in
/// reverse lexicographic order of the vectors.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Prints as `1:2,2:1,3:1`, listing every rank of the alphabet.
impl fmt::Display for MultisetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", i + 1, m)?;
        }
        Ok(())
    }
}

impl FromStr for MultisetSpec {
    type Err = Error;

    /// Parses `rank:multiplicity` pairs. The alphabet is `1..=max rank`;
    /// ranks that are not listed get multiplicity zero.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut position = 0;
        for field in s.split(',') {
            let (rank, mult) = field.split_once(':').ok_or_else(|| {
                Error::parse(
                    position,
                    format!("expected rank:multiplicity, found {field:?}"),
                )
            })?;
            let rank = parse_rank(rank, position)? as usize;
            let mult_position = position + field.find(':').unwrap_or(0) + 1;
            let mult = mult.trim().parse::<usize>().map_err(|_| {
                Error::parse(
                    mult_position,
                    format!("expected a multiplicity, found {:?}", mult.trim()),
                )
            })?;
            if pairs.iter().any(|&(r, _)| r == rank) {
                return Err(Error::parse(position, format!("rank {rank} listed twice")));
            }
            pairs.push((rank, mult));
            position += field.len() + 1;
        }
        let size = pairs.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut multiplicities = vec![0; size];
        for (rank, mult) in pairs {
            multiplicities[rank - 1] = mult;
        }
        MultisetSpec::from_multiplicities(multiplicities)
    }
}

impl Serialize for MultisetSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Result of [`lex_compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexComparison {
    pub ordering: Ordering,
    /// One word is a strict prefix of the other.
    pub proper_prefix: bool,
}

impl LexComparison {
    /// `u ⊴ v`: less than or equal, prefixes included.
    pub fn is_at_most(&self) -> bool {
        self.ordering != Ordering::Greater
    }

    /// `u ◁ v`: strictly less and `u` is not a proper prefix of `v`.
    pub fn is_strictly_below(&self) -> bool {
        self.ordering == Ordering::Less && !self.proper_prefix
    }
}

pub fn lex_compare(u: &Word, v: &Word) -> LexComparison {
    let common = u.len().min(v.len());
    let proper_prefix = u.len() != v.len() && u.0[..common] == v.0[..common];
    LexComparison {
        ordering: u.0.cmp(&v.0),
        proper_prefix,
    }
}

/// Whether `w` is not a proper power `u^n` with `n >= 2`.
pub fn is_primitive(w: &Word) -> Result<bool> {
    w.non_empty()?;
    Ok(smallest_period_dividing(w.letters()) == w.len())
}

/// Smallest `p` dividing `|w|` such that `w` is a power of its prefix of length `p`.
fn smallest_period_dividing(w: &[Letter]) -> usize {
    let n = w.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && w.iter().zip(&w[p..]).all(|(a, b)| a == b))
        .unwrap_or(n)
}

/// The `|w|` rotations of `w`, by increasing offset.
pub fn conjugates(w: &Word) -> Result<Vec<Word>> {
    w.non_empty()?;
    Ok((0..w.len()).map(|i| w.rotation(i)).collect())
}

pub fn is_conjugate(u: &Word, v: &Word) -> Result<bool> {
    u.non_empty()?;
    v.non_empty()?;
    if u.len() != v.len() {
        return Ok(false);
    }
    Ok((0..u.len()).any(|i| u.0[i..] == v.0[..u.len() - i] && u.0[..i] == v.0[u.len() - i..]))
}

/// Occurrence counts of each letter of `alphabet` in `w`.
///
/// Panics if `w` contains a letter outside the alphabet.
pub fn content(w: &Word, alphabet: Alphabet) -> ContentVector {
    let mut counts = vec![0; alphabet.size()];
    for &a in w.letters() {
        assert!(alphabet.contains(a), "letter {a} outside alphabet");
        counts[a as usize - 1] += 1;
    }
    ContentVector { counts }
}

/// Number of permutations of `m`: `N! / (m1! ... mn!)`.
pub fn count_permutations(m: &MultisetSpec) -> BigUint {
    multinomial(m.multiplicities())
}

pub(crate) fn multinomial(parts: &[usize]) -> BigUint {
    // Product of binomials C(m1, m1) C(m1+m2, m2) ... keeps intermediates small.
    let mut result = BigUint::one();
    let mut running = 0usize;
    for &m in parts {
        for i in 1..=m {
            result *= BigUint::from(running + i);
            result /= BigUint::from(i);
        }
        running += m;
    }
    result
}

/// `n!`.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}
