//! Seeded random morphisms.

use rand::Rng;
use serde::Serialize;

use crate::morphism::{binary_shape, Morphism, ShapeTag};
use crate::word::Alphabet;

const LETTERS: [char; 26] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k', 'l', 'm', 'n', 'o', 'p', 'q', 'r', 's', 't', 'u', 'v', 'w',
    'x', 'y', 'z',
];

fn random_word<R: Rng>(rng: &mut R, lens: std::ops::RangeInclusive<usize>, k: usize) -> Vec<u8> {
    let len = rng.random_range(lens);
    (0..len).map(|_| rng.random_range(0..k) as u8).collect()
}

fn build(images: Vec<Vec<u8>>) -> Morphism {
    let alphabet = Alphabet::new(LETTERS[..images.len()].iter().copied()).expect("at most 26 letters");
    Morphism::new(alphabet, images).expect("images are non-empty")
}

/// Image lengths uniform in `1..=6`, letters uniform over `k` letters,
/// rejected until the morphism is prolongable on some letter.
pub fn random_morphism<R: Rng>(rng: &mut R, k: usize) -> Morphism {
    loop {
        let images: Vec<Vec<u8>> = (0..k).map(|_| random_word(rng, 1..=6, k)).collect();
        let m = build(images);
        if m.prolongable_letter().is_some() {
            return m;
        }
    }
}

/// Binary families that carry an R-set formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeFamily {
    /// `(a u a b^k, b)`, `k >= 1`.
    AuabKB,
    /// `(a u b a^k, b)`, `k >= 1`.
    AubaKB,
    /// `(a v, b^ℓ)`, `ℓ >= 2`.
    AuabKBl,
}

impl ShapeFamily {
    pub const ALL: [ShapeFamily; 3] = [ShapeFamily::AuabKB, ShapeFamily::AubaKB, ShapeFamily::AuabKBl];

    pub fn tag(self) -> ShapeTag {
        match self {
            ShapeFamily::AuabKB => ShapeTag::AuabKB,
            ShapeFamily::AubaKB => ShapeTag::AubaKB,
            ShapeFamily::AuabKBl => ShapeTag::AuabKBl,
        }
    }
}

/// A binary morphism prolongable on `a` whose shape tag is `family`'s, with
/// `|α| <= 8` and `ℓ <= 4`.
pub fn random_shape_morphism<R: Rng>(rng: &mut R, family: ShapeFamily) -> Morphism {
    loop {
        let (alpha, beta) = match family {
            ShapeFamily::AuabKB => {
                let mut alpha = vec![0];
                alpha.extend(random_word(rng, 0..=3, 2));
                alpha.push(0);
                alpha.extend(std::iter::repeat_n(1, rng.random_range(1..=3)));
                (alpha, vec![1])
            }
            ShapeFamily::AubaKB => {
                let mut alpha = vec![0];
                alpha.extend(random_word(rng, 0..=3, 2));
                alpha.push(1);
                alpha.extend(std::iter::repeat_n(0, rng.random_range(1..=3)));
                (alpha, vec![1])
            }
            ShapeFamily::AuabKBl => {
                let mut alpha = vec![0];
                alpha.extend(random_word(rng, 1..=7, 2));
                (alpha, vec![1; rng.random_range(2..=4)])
            }
        };
        let m = build(vec![alpha, beta]);
        if binary_shape(&m).map(|s| s.tag == family.tag() && s.a == 0).unwrap_or(false) {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn sampled_morphisms_are_prolongable() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 2..=4 {
            for _ in 0..50 {
                let m = random_morphism(&mut rng, k);
                assert_eq!(m.size(), k);
                assert!(m.prolongable_letter().is_some());
                assert!((0..k as u8).all(|c| (1..=6).contains(&m.image(c).len())));
            }
        }
    }

    #[test]
    fn shape_samplers_hit_their_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for family in ShapeFamily::ALL {
            for _ in 0..50 {
                let m = random_shape_morphism(&mut rng, family);
                assert_eq!(binary_shape(&m).unwrap().tag, family.tag());
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = random_morphism(&mut ChaCha8Rng::seed_from_u64(3), 2);
        let b = random_morphism(&mut ChaCha8Rng::seed_from_u64(3), 2);
        assert_eq!(a, b);
    }
}
