use num_bigint::BigUint;
use thiserror::Error;

use crate::morphism::ShapeTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("alphabet has {0} letters, at most 26 are supported")]
    AlphabetTooLarge(usize),
    #[error("letter {0:?} appears twice in the alphabet")]
    DuplicateLetter(char),
    #[error("{0:?} cannot be used as a letter")]
    InvalidSymbol(char),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("the word is empty")]
    EmptyWord,
    #[error("image of {0:?} is empty (erasing morphism)")]
    ErasingImage(char),
    #[error("predicted length {predicted} exceeds the cap of {cap} symbols")]
    CapExceeded { predicted: BigUint, cap: usize },
    #[error("factor length {k} is outside 0..={n}")]
    LengthOutOfRange { k: usize, n: usize },
    #[error("expected a binary alphabet, found {0} letters")]
    NotBinary(usize),
    #[error("morphism is not prolongable on {0:?}")]
    NotProlongable(char),
    #[error("morphism is not prolongable on any letter")]
    NoProlongableLetter,
    #[error("word has no occurrence of {0:?}")]
    MissingLetter(char),
    #[error("shape {0} is not covered by an R-set formula")]
    ShapeNotCovered(ShapeTag),
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A morphism-spec syntax or validation error, tagged with its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `letter -> image` or `alphabet: ...`")]
    Malformed,
    #[error("rule head must be a single letter, found {0:?}")]
    BadHead(String),
    #[error("image of {0:?} is empty (erasing morphism)")]
    Erasing(char),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("second rule for {0:?}")]
    DuplicateRule(char),
    #[error("second `alphabet:` line")]
    DuplicateAlphabet,
    #[error("letter {0:?} appears twice in the alphabet")]
    DuplicateLetter(char),
    #[error("alphabet has {0} letters, at most 26 are supported")]
    AlphabetTooLarge(usize),
    #[error("{0:?} cannot be used as a letter")]
    InvalidSymbol(char),
    #[error("no rule for letter {0:?}")]
    MissingRule(char),
    #[error("no rules")]
    Empty,
}
