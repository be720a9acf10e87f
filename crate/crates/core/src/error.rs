use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("multiset has cardinality zero")]
    EmptyMultiset,

    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),

    #[error("single letter {0} has no standard factorization")]
    SingleLetter(String),

    #[error("Lyndon factorization of {word} repeats the factor {repeated}")]
    NonDistinctFactors { word: String, repeated: String },

    #[error("word of length {0} is too short; at least 2 letters are required")]
    TooShort(usize),

    #[error("letter {letter} is outside the alphabet 1..={size}")]
    LetterOutOfRange { letter: u32, size: usize },

    #[error("alphabet size must be between 1 and {max}, got {got}")]
    AlphabetSize { got: usize, max: usize },

    #[error("expected {expected} multiplicities, got {got}")]
    MultiplicityCount { expected: usize, got: usize },

    #[error("factors are not strictly increasing Lyndon words: {0}")]
    InvalidTuple(String),

    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error("polynomials have {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("polynomials are truncated at degree {left} and {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
