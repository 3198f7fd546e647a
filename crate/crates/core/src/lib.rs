//! Burrows–Wheeler run statistics of purely morphic words.
//!
//! [`morphism`] builds and iterates morphisms, [`analysis`] measures concrete
//! words, and [`harness`] compares closed-form predictions with measurements.

pub mod analysis;
pub mod error;
pub mod harness;
pub mod morphism;
pub mod word;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use morphism::Morphism;
pub use word::{Alphabet, LetterSet, Word};
