//! Circular factor lookup by binary search over the sorted rotations.

use std::cmp::Ordering;

use super::bwt::sort_rotations;
use crate::word::LetterSet;

/// Prefix counts of each letter over a sequence, for distinct-letter queries.
pub(crate) struct LetterPrefix {
    k: usize,
    counts: Vec<u32>,
}

impl LetterPrefix {
    pub(crate) fn new(seq: &[u8], k: usize) -> Self {
        let mut counts = vec![0u32; (seq.len() + 1) * k];
        for (j, &c) in seq.iter().enumerate() {
            let (prev, next) = counts.split_at_mut((j + 1) * k);
            next[..k].copy_from_slice(&prev[j * k..]);
            next[c as usize] += 1;
        }
        LetterPrefix { k, counts }
    }

    /// Letters occurring in `seq[lo..=hi]`.
    pub(crate) fn letters(&self, lo: usize, hi: usize) -> LetterSet {
        let k = self.k;
        (0..k as u8).filter(|&c| self.counts[(hi + 1) * k + c as usize] > self.counts[lo * k + c as usize]).collect()
    }
}

/// Answers extension queries for circular factors of one word.
pub struct CircularIndex<'a> {
    s: &'a [u8],
    order: Vec<usize>,
    preceding: LetterPrefix,
}

impl<'a> CircularIndex<'a> {
    pub fn new(s: &'a [u8]) -> Self {
        let n = s.len();
        let order = sort_rotations(s);
        let k = s.iter().copied().max().map_or(1, |m| m as usize + 1);
        let bwt: Vec<u8> = order.iter().map(|&p| s[(p + n - 1) % n]).collect();
        CircularIndex { s, preceding: LetterPrefix::new(&bwt, k), order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    fn at(&self, row: usize, offset: usize) -> u8 {
        let n = self.s.len();
        self.s[(self.order[row] + offset) % n]
    }

    fn cmp_row(&self, row: usize, u: &[u8]) -> Ordering {
        for (h, &c) in u.iter().enumerate() {
            match self.at(row, h).cmp(&c) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Sorted-rotation rows starting with `u`, when `u` is a circular factor
    /// shorter than the word.
    pub fn rows(&self, u: &[u8]) -> Option<(usize, usize)> {
        let n = self.s.len();
        if u.len() >= n {
            return None;
        }
        let lo = self.partition(0, n, |row| self.cmp_row(row, u) == Ordering::Less);
        let hi = self.partition(lo, n, |row| self.cmp_row(row, u) != Ordering::Greater);
        (lo < hi).then(|| (lo, hi - 1))
    }

    /// First row in `lo..hi` for which `pred` is false; `pred` must be
    /// monotone true-then-false.
    fn partition(&self, mut lo: usize, mut hi: usize, pred: impl Fn(usize) -> bool) -> usize {
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if pred(mid) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lo
    }

    pub fn left(&self, u: &[u8]) -> LetterSet {
        self.rows(u).map_or_else(LetterSet::default, |(lo, hi)| self.preceding.letters(lo, hi))
    }

    /// Rows starting with `u` are sorted by the letter that follows `u`, so
    /// each distinct letter is found with one binary search.
    pub fn right(&self, u: &[u8]) -> LetterSet {
        let mut set = LetterSet::default();
        let Some((lo, hi)) = self.rows(u) else {
            return set;
        };
        let len = u.len();
        let mut row = lo;
        while row <= hi {
            let c = self.at(row, len);
            set.insert(c);
            row = self.partition(row, hi + 1, |r| self.at(r, len) <= c);
        }
        set
    }

    pub fn is_bispecial(&self, u: &[u8]) -> bool {
        self.left(u).len() >= 2 && self.right(u).len() >= 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abbba_queries() {
        let s = [0, 1, 1, 1, 0];
        let idx = CircularIndex::new(&s);
        assert!(idx.is_bispecial(&[1, 1]));
        assert!(idx.is_bispecial(&[]));
        assert!(!idx.is_bispecial(&[1, 1, 1]));
        assert_eq!(idx.rows(&[0, 0]), Some((0, 0)));
        assert_eq!(idx.rows(&[0, 0, 0]), None);
        assert_eq!(idx.right(&[1]).len(), 2);
        assert_eq!(idx.left(&[0, 0]).iter().collect::<Vec<_>>(), vec![1]);
        assert!(idx.right(&[0, 1, 0]).is_empty());
    }
}
