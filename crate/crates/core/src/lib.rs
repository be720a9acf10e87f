//! Lyndon words over multisets and the even/odd word identity.
//!
//! The crate factors words into Lyndon words, classifies the permutations of
//! a multiset as even or odd by their Lyndon index, and provides a
//! content-preserving involution that swaps the two classes. Exhaustive
//! verifiers check the coin arrangements lemma, its Stirling specialization,
//! Cauchy's parity fact and the Witt product identity.

#![forbid(unsafe_code)]

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod involution;
mod json;
pub mod lyndon;
pub mod permutations;
pub mod witt;
pub mod words;

pub use error::{Error, Result};
pub use lyndon::{LyndonTuple, Parity};
pub use words::{Alphabet, ContentVector, Letter, MultisetSpec, Word};
