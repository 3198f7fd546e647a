use std::collections::BTreeSet;

use super::bwt::{rotation_lcp, sort_rotations};
use crate::error::{Error, Result};
use crate::word::Word;

/// Exponents `q` such that `a b^q a` is a circular factor.
pub type RSet = BTreeSet<usize>;

/// Gaps between cyclically consecutive occurrences of `a`, in one scan.
pub fn r_set(w: &Word, a: u8) -> Result<RSet> {
    let letters = w.distinct_letters();
    if letters.len() > 2 {
        return Err(Error::NotBinary(letters.len()));
    }
    let s = w.symbols();
    let n = s.len();
    let first = s.iter().position(|&c| c == a).ok_or_else(|| Error::MissingLetter(w.alphabet().letter(a)))?;
    let mut set = RSet::new();
    let mut prev = first;
    for i in first + 1..first + n + 1 {
        let p = i % n;
        if s[p] == a {
            set.insert((i - prev) - 1);
            prev = i;
        }
    }
    Ok(set)
}

/// The longest common prefix `(start, len)` of the two rotations around a
/// BWT run boundary, for each boundary `j` between sorted rows `j` and `j+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryFactor {
    pub boundary: usize,
    pub start: usize,
    pub len: usize,
}

pub fn run_boundary_bispecials(w: &Word) -> Vec<BoundaryFactor> {
    let s = w.symbols();
    let n = s.len();
    if n < 2 {
        return Vec::new();
    }
    let order = sort_rotations(s);
    let lcp = rotation_lcp(s, &order);
    let last = |j: usize| s[(order[j] + n - 1) % n];
    (0..n - 1)
        .filter(|&j| last(j) != last(j + 1))
        .map(|j| BoundaryFactor { boundary: j, start: order[j + 1], len: lcp[j + 1] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> RSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn examples() {
        assert_eq!(r_set(&Word::parse("ababbbababbb").unwrap(), 0), Ok(set(&[1, 3])));
        assert_eq!(r_set(&Word::parse("aabaabb").unwrap(), 0), Ok(set(&[0, 1, 2])));
        assert_eq!(r_set(&Word::parse("aaaa").unwrap(), 0), Ok(set(&[0])));
        assert_eq!(r_set(&Word::parse("abba").unwrap(), 0), Ok(set(&[0, 2])));
        assert_eq!(r_set(&Word::parse("abbb").unwrap(), 0), Ok(set(&[3])));
    }

    #[test]
    fn errors() {
        let w = Word::parse("bbb").unwrap();
        let alphabet = crate::word::Alphabet::new(['a', 'b']).unwrap();
        let w2 = Word::parse_with("bbb", &alphabet).unwrap();
        assert_eq!(r_set(&w2, 0), Err(Error::MissingLetter('a')));
        assert!(r_set(&w, 0).is_ok());
        assert_eq!(r_set(&Word::parse("abc").unwrap(), 0), Err(Error::NotBinary(3)));
    }

    #[test]
    fn boundaries_of_abbba() {
        let w = Word::parse("abbba").unwrap();
        let found: Vec<String> = run_boundary_bispecials(&w)
            .iter()
            .map(|f| w.alphabet().render(&w.circular_factor(f.start, f.len)))
            .collect();
        assert_eq!(found, vec!["a", "", "bb"]);
        assert!(run_boundary_bispecials(&Word::parse("aaaa").unwrap()).is_empty());
    }
}
