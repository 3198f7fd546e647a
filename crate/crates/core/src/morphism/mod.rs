//! Non-erasing morphisms, their iterates and their growth.

mod dsl;
mod growth;
mod periodicity;
mod shape;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, ParseError, Result};
use crate::word::{Alphabet, Word};

pub use growth::{
    bounded_letters, classify_growth, run_boundedness, GrowthClass, GrowthReport, LetterGrowth, RunBoundedness,
};
pub use periodicity::{
    detect_periodicity, detect_ultimately_periodic_binary, empirical_period, EmpiricalPeriod, Periodicity,
    PeriodicityReport, DEFAULT_PERIOD_PREFIX,
};
pub use shape::{binary_shape, BinaryShape, ShapeTag};

/// Default length cap for [`Morphism::iterate`].
pub const DEFAULT_ITERATE_CAP: usize = 10_000_000;

/// A non-erasing morphism on an ordered alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Vec<u8>>,
    /// `incidence[b][a]` = number of occurrences of `b` in the image of `a`.
    incidence: Vec<Vec<u64>>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<Vec<u8>>) -> Result<Self> {
        let k = alphabet.len();
        assert_eq!(images.len(), k, "one image per letter");
        let mut incidence = vec![vec![0u64; k]; k];
        for (a, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::ErasingImage(alphabet.letter(a as u8)));
            }
            for &b in image {
                if b as usize >= k {
                    return Err(Error::InvalidSymbol(char::REPLACEMENT_CHARACTER));
                }
                incidence[b as usize][a] += 1;
            }
        }
        Ok(Morphism { alphabet, images, incidence })
    }

    /// Builds a morphism from `(letter, image)` pairs, alphabet ascending.
    pub fn from_pairs(pairs: &[(char, &str)]) -> Result<Self> {
        let alphabet = Alphabet::ascending(pairs.iter().map(|p| p.0))?;
        let mut images = vec![Vec::new(); alphabet.len()];
        for &(c, image) in pairs {
            images[alphabet.require_rank(c)? as usize] = alphabet.encode(image)?;
        }
        Morphism::new(alphabet, images)
    }

    /// Parses the morphism-spec text format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        dsl::parse(text)
    }

    /// Serializes to the morphism-spec text format: the alphabet line, then
    /// one rule per letter in alphabet order.
    pub fn to_spec(&self) -> String {
        dsl::serialize(self)
    }

    /// Short content digest of the canonical spec text.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.to_spec().as_bytes());
        hex::encode(&hash[..8])
    }

    /// One-line rendering such as `a->abab,b->bb`.
    pub fn compact(&self) -> String {
        self.alphabet
            .letters()
            .iter()
            .enumerate()
            .map(|(r, c)| format!("{c}->{}", self.alphabet.render(self.image(r as u8))))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn image(&self, rank: u8) -> &[u8] {
        &self.images[rank as usize]
    }

    pub fn incidence(&self) -> &[Vec<u64>] {
        &self.incidence
    }

    pub fn rank(&self, c: char) -> Result<u8> {
        self.alphabet.require_rank(c)
    }

    /// Applies the morphism to a rank slice.
    pub fn apply(&self, word: &[u8]) -> Vec<u8> {
        let len = word.iter().map(|&c| self.images[c as usize].len()).sum();
        let mut out = Vec::with_capacity(len);
        for &c in word {
            out.extend_from_slice(&self.images[c as usize]);
        }
        out
    }

    /// The image of `c` starts with `c` and has length at least 2.
    pub fn is_prolongable(&self, c: u8) -> bool {
        let image = self.image(c);
        image.len() >= 2 && image[0] == c
    }

    /// The first letter, in alphabet order, on which the morphism is prolongable.
    pub fn prolongable_letter(&self) -> Option<u8> {
        (0..self.size() as u8).find(|&c| self.is_prolongable(c))
    }

    /// Exact letter counts of the `i`-th iterate on `c`: the `i`-th power of
    /// the incidence matrix applied to the unit vector of `c`.
    pub fn parikh_counts(&self, c: u8, i: usize) -> Vec<BigUint> {
        let k = self.size();
        let mut v = vec![BigUint::zero(); k];
        v[c as usize] = BigUint::one();
        for _ in 0..i {
            let mut next = vec![BigUint::zero(); k];
            for (b, row) in self.incidence.iter().enumerate() {
                for (a, &count) in row.iter().enumerate() {
                    if count != 0 && !v[a].is_zero() {
                        next[b] += &v[a] * count;
                    }
                }
            }
            v = next;
        }
        v
    }

    /// `|φ^i(c)|`, exactly.
    pub fn length(&self, c: u8, i: usize) -> BigUint {
        self.parikh_counts(c, i).into_iter().sum()
    }

    /// The `i`-th iterate on `c`. The predicted length is checked against
    /// `cap` before anything is allocated.
    pub fn iterate(&self, c: u8, i: usize, cap: usize) -> Result<Word> {
        let predicted = self.length(c, i);
        if predicted > BigUint::from(cap) {
            return Err(Error::CapExceeded { predicted, cap });
        }
        let mut w = vec![c];
        for _ in 0..i {
            w = self.apply(&w);
        }
        Ok(Word::from_ranks(self.alphabet.clone(), w))
    }

    /// Every iterate `φ^0(c), …, φ^i(c)` that fits under `cap`, in order.
    pub fn iterates(&self, c: u8, max_i: usize, cap: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut w = vec![c];
        for i in 0..=max_i {
            if i > 0 {
                if self.length(c, i) > BigUint::from(cap) {
                    break;
                }
                w = self.apply(&w);
            }
            out.push(Word::from_ranks(self.alphabet.clone(), w.clone()));
        }
        out
    }

    /// The length-`len` prefix of the fixed point on a prolongable `c`.
    pub fn fixed_point_prefix(&self, c: u8, len: usize) -> Result<Vec<u8>> {
        if !self.is_prolongable(c) {
            return Err(Error::NotProlongable(self.alphabet.letter(c)));
        }
        let mut x = self.image(c).to_vec();
        let mut read = 1;
        while x.len() < len {
            let next = x[read];
            x.extend_from_slice(self.image(next));
            read += 1;
        }
        x.truncate(len);
        Ok(x)
    }

    /// Some power of the incidence matrix is entrywise positive. Powers are
    /// tried up to the Wielandt bound `(k-1)^2 + 1`.
    pub fn is_primitive(&self) -> bool {
        let k = self.size();
        let base: Vec<Vec<bool>> = self.incidence.iter().map(|row| row.iter().map(|&x| x > 0).collect()).collect();
        let bound = (k - 1) * (k - 1) + 1;
        let mut power = base.clone();
        for _ in 0..bound {
            if power.iter().all(|row| row.iter().all(|&x| x)) {
                return true;
            }
            let mut next = vec![vec![false; k]; k];
            for i in 0..k {
                for j in 0..k {
                    next[i][j] = (0..k).any(|m| power[i][m] && base[m][j]);
                }
            }
            power = next;
        }
        false
    }
}
