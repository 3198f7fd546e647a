//! Ordered alphabets and finite words.
//!
//! Letters are stored as ranks `0..k` into their [`Alphabet`], so comparing
//! ranks is comparing letters in the alphabet's order. Every algorithm in the
//! crate works on rank slices; characters only appear at the text boundary.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_LETTERS: usize = 26;

/// Returns true if `c` may be used as a letter.
pub fn is_letter(c: char) -> bool {
    c.is_alphanumeric()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet whose order is the iteration order of `letters`.
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if letters.len() > MAX_LETTERS {
            return Err(Error::AlphabetTooLarge(letters.len()));
        }
        for (i, &c) in letters.iter().enumerate() {
            if !is_letter(c) {
                return Err(Error::InvalidSymbol(c));
            }
            if letters[..i].contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Builds an alphabet from the distinct letters of `letters`, in ascending order.
    pub fn ascending(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut letters: Vec<char> = letters.into_iter().collect();
        letters.sort_unstable();
        letters.dedup();
        Alphabet::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, rank: u8) -> char {
        self.letters[rank as usize]
    }

    pub fn rank(&self, c: char) -> Option<u8> {
        self.letters.iter().position(|&l| l == c).map(|r| r as u8)
    }

    pub fn require_rank(&self, c: char) -> Result<u8> {
        self.rank(c).ok_or(Error::UnknownLetter(c))
    }

    /// Renders a rank slice as text.
    pub fn render(&self, ranks: &[u8]) -> String {
        ranks.iter().map(|&r| self.letter(r)).collect()
    }

    /// Converts text to ranks; whitespace is skipped.
    pub fn encode(&self, text: &str) -> Result<Vec<u8>> {
        text.chars().filter(|c| !c.is_whitespace()).map(|c| self.require_rank(c)).collect()
    }
}

/// A set of letters of an alphabet with at most 26 letters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LetterSet(u32);

impl LetterSet {
    pub fn insert(&mut self, rank: u8) {
        self.0 |= 1 << rank;
    }

    pub fn contains(self, rank: u8) -> bool {
        self.0 & (1 << rank) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..MAX_LETTERS as u8).filter(move |&r| self.contains(r))
    }
}

impl FromIterator<u8> for LetterSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut set = LetterSet::default();
        for r in iter {
            set.insert(r);
        }
        set
    }
}

/// A finite word over an ordered alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Word {
    /// Wraps ranks that are known to be valid for `alphabet`.
    pub fn from_ranks(alphabet: Alphabet, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&r| (r as usize) < alphabet.len()));
        Word { alphabet, symbols }
    }

    /// Parses text over the alphabet of its own letters, ordered ascending.
    pub fn parse(text: &str) -> Result<Self> {
        let alphabet = Alphabet::ascending(text.chars().filter(|c| !c.is_whitespace()))?;
        Word::parse_with(text, &alphabet)
    }

    pub fn parse_with(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let symbols = alphabet.encode(text)?;
        Ok(Word { alphabet: alphabet.clone(), symbols })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of occurrences of the letter with rank `rank`.
    pub fn count(&self, rank: u8) -> usize {
        self.symbols.iter().filter(|&&r| r == rank).count()
    }

    pub fn distinct_letters(&self) -> LetterSet {
        self.symbols.iter().copied().collect()
    }

    /// The circular factor of length `len` starting at `start`.
    pub fn circular_factor(&self, start: usize, len: usize) -> Vec<u8> {
        let n = self.symbols.len();
        (0..len).map(|j| self.symbols[(start + j) % n]).collect()
    }

    pub fn rotate(&self, shift: usize) -> Word {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            let n = symbols.len();
            symbols.rotate_left(shift % n);
        }
        Word { alphabet: self.alphabet.clone(), symbols }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.symbols {
            write!(f, "{}", self.alphabet.letter(r))?;
        }
        Ok(())
    }
}
