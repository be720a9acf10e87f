//! The weight-preserving, parity-flipping split/merge involution on words
//! with a Lyndon tuple.
//!
//! For a tuple `(l_1, ..., l_k)` the smallest factor `l_1` either splits into
//! its standard factorization `(r_1, s_1)`, giving `(r_1, s_1, l_2, ..., l_k)`,
//! or merges with `l_2`, giving `(l_1 l_2, l_3, ..., l_k)`. Each case changes
//! `k` by one, so the Lyndon index changes parity, and neither changes the
//! multiset of letters.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::words_of;
use crate::error::{Error, Result};
use crate::lyndon::{lyndon_tuple, standard_factorization, tuple_to_word, LyndonTuple};
use crate::words::{content, MultisetSpec, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ToggleCase {
    Split,
    Merge,
}

/// `l_1` splits when it is not a letter and the right factor `s_1` of its
/// standard factorization is below `l_2` (or there is no `l_2`).
pub fn is_splittable(t: &LyndonTuple) -> Result<bool> {
    if t.total_length() <= 1 {
        return Err(Error::TooShort(t.total_length()));
    }
    Ok(split_of(t)?.is_some())
}

fn split_of(t: &LyndonTuple) -> Result<Option<(Word, Word)>> {
    let factors = t.factors();
    let first = &factors[0];
    if first.len() < 2 {
        return Ok(None);
    }
    let (r, s) = standard_factorization(first)?;
    match factors.get(1) {
        Some(next) if s >= *next => Ok(None),
        _ => Ok(Some((r, s))),
    }
}

/// Applies the involution to a tuple, returning the image and the case taken.
pub fn toggle_tuple(t: &LyndonTuple) -> Result<(LyndonTuple, ToggleCase)> {
    if t.total_length() <= 1 {
        return Err(Error::TooShort(t.total_length()));
    }
    let factors = t.factors();
    match split_of(t)? {
        Some((r, s)) => {
            let mut image = Vec::with_capacity(factors.len() + 1);
            image.push(r);
            image.push(s);
            image.extend_from_slice(&factors[1..]);
            Ok((LyndonTuple::new_unchecked(image), ToggleCase::Split))
        }
        None => {
            // not splittable with N >= 2 forces k >= 2
            let merged = factors[0].concat(&factors[1]);
            let mut image = Vec::with_capacity(factors.len() - 1);
            image.push(merged);
            image.extend_from_slice(&factors[2..]);
            Ok((LyndonTuple::new_unchecked(image), ToggleCase::Merge))
        }
    }
}

/// Image of `w` under the involution.
pub fn toggle(w: &Word) -> Result<Word> {
    Ok(toggle_traced(w)?.image)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToggleTrace {
    pub word: Word,
    pub tuple: LyndonTuple,
    pub case: ToggleCase,
    pub image: Word,
    pub image_tuple: LyndonTuple,
}

pub fn toggle_traced(w: &Word) -> Result<ToggleTrace> {
    if w.len() <= 1 {
        return Err(Error::TooShort(w.len()));
    }
    let tuple = lyndon_tuple(w)?;
    let (image_tuple, case) = toggle_tuple(&tuple)?;
    Ok(ToggleTrace {
        word: w.clone(),
        image: tuple_to_word(&image_tuple),
        tuple,
        case,
        image_tuple,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionFailure {
    pub word: Word,
    pub tuple: Option<LyndonTuple>,
    pub image: Option<Word>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub multiset: MultisetSpec,
    pub checked: u64,
    pub excluded: u64,
    pub splits: u64,
    pub merges: u64,
    pub failures: Vec<InvolutionFailure>,
}

impl InvolutionReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    excluded: u64,
    splits: u64,
    merges: u64,
    failures: Vec<InvolutionFailure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.excluded += other.excluded;
        self.splits += other.splits;
        self.merges += other.merges;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs every check on one word, recording into `tally`.
fn check_word(m: &MultisetSpec, w: &Word, tally: &mut Tally) {
    let tuple = match lyndon_tuple(w) {
        Ok(t) => t,
        Err(Error::NonDistinctFactors { .. }) => {
            tally.excluded += 1;
            return;
        }
        Err(e) => {
            tally.failures.push(InvolutionFailure {
                word: w.clone(),
                tuple: None,
                image: None,
                reason: e.to_string(),
            });
            return;
        }
    };
    tally.checked += 1;
    let mut fail = |image: Option<Word>, reason: String| {
        tally.failures.push(InvolutionFailure {
            word: w.clone(),
            tuple: Some(tuple.clone()),
            image,
            reason,
        });
    };
    let trace = match toggle_traced(w) {
        Ok(t) => t,
        Err(e) => return fail(None, e.to_string()),
    };
    let image = trace.image.clone();
    match lyndon_tuple(&image) {
        Ok(t) if t == trace.image_tuple => {}
        Ok(t) => {
            return fail(
                Some(image),
                format!("image factors as {t}, expected {}", trace.image_tuple),
            )
        }
        Err(e) => return fail(Some(image), format!("image has no tuple: {e}")),
    }
    if trace.image_tuple.parity() == tuple.parity() {
        fail(
            Some(image.clone()),
            format!("parity stays {}", tuple.parity()),
        );
    }
    let alphabet = m.alphabet();
    if content(&image, alphabet) != content(w, alphabet) {
        fail(Some(image.clone()), "content changed".into());
    }
    match toggle(&image) {
        Ok(back) if back == *w => {}
        Ok(back) => fail(Some(image.clone()), format!("toggle of image is {back}")),
        Err(e) => fail(Some(image.clone()), format!("toggle of image failed: {e}")),
    }
    match trace.case {
        ToggleCase::Split => tally.splits += 1,
        ToggleCase::Merge => {
            tally.merges += 1;
            let (l1, l2) = (&tuple.factors()[0], &tuple.factors()[1]);
            match standard_factorization(&trace.image_tuple.factors()[0]) {
                Ok((r, s)) if r == *l1 && s == *l2 => {}
                Ok((r, s)) => fail(
                    Some(image),
                    format!(
                        "standard factorization of {l1}{l2} is ({r},{s}), expected ({l1},{l2})"
                    ),
                ),
                Err(e) => fail(Some(image), format!("merged factor: {e}")),
            }
        }
    }
}

/// Checks the involution on every tuple-admitting permutation of `m`.
///
/// Failures are collected, not raised. They come back sorted by word so the
/// report does not depend on how the work was scheduled.
pub fn verify_involution(m: &MultisetSpec) -> Result<InvolutionReport> {
    if m.cardinality() < 2 {
        return Err(Error::TooShort(m.cardinality()));
    }
    let tally = words_of(m)?
        .par_bridge()
        .fold(Tally::default, |mut tally, w| {
            check_word(m, &w, &mut tally);
            tally
        })
        .reduce(Tally::default, Tally::merge);
    let mut failures = tally.failures;
    failures.sort_by(|a, b| a.word.cmp(&b.word).then_with(|| a.reason.cmp(&b.reason)));
    Ok(InvolutionReport {
        multiset: m.clone(),
        checked: tally.checked,
        excluded: tally.excluded,
        splits: tally.splits,
        merges: tally.merges,
        failures,
    })
}
