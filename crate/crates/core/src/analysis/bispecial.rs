//! Circular bispecial factors.
//!
//! Occurrences of a circular factor `u` with `|u| < n` are the rotations that
//! start with `u`, which form a contiguous block of the sorted rotations. A
//! right special `u` is exactly the common prefix of an lcp-interval whose
//! value is `|u|`: the child blocks are its right extensions, and the letters
//! preceding the rotations of a block (the BWT letters) are the left
//! extensions. Factors of length `n` or more are never special.

use num_bigint::BigUint;
use serde::Serialize;

use super::bwt::{rotation_lcp, sort_rotations};
use super::index::LetterPrefix;
use crate::error::{Error, Result};
use crate::word::{LetterSet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BispecialClass {
    Strict,
    Weak,
    Ordinary,
}

/// A bispecial circular factor, stored as `(start, len)` into the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BispecialRecord {
    pub start: usize,
    pub len: usize,
    pub left: LetterSet,
    pub right: LetterSet,
    /// Number of distinct `x u y` among circular factors.
    pub two_sided: usize,
    pub class: BispecialClass,
}

impl BispecialRecord {
    pub fn e_left(&self) -> usize {
        self.left.len() - 1
    }

    pub fn e_right(&self) -> usize {
        self.right.len() - 1
    }

    pub fn factor(&self, w: &[u8]) -> Vec<u8> {
        let n = w.len();
        (0..self.len).map(|j| w[(self.start + j) % n]).collect()
    }
}

/// Classifies from the extension counts.
pub fn classify(left: usize, right: usize, two_sided: usize) -> BispecialClass {
    if two_sided == left * right {
        BispecialClass::Strict
    } else if two_sided == left.max(right) {
        BispecialClass::Weak
    } else {
        BispecialClass::Ordinary
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BispecialCounts {
    pub strict: usize,
    pub weak: usize,
    pub ordinary: usize,
}

impl BispecialCounts {
    pub fn of(records: &[BispecialRecord]) -> Self {
        let mut counts = BispecialCounts::default();
        for r in records {
            match r.class {
                BispecialClass::Strict => counts.strict += 1,
                BispecialClass::Weak => counts.weak += 1,
                BispecialClass::Ordinary => counts.ordinary += 1,
            }
        }
        counts
    }
}

/// All bispecial circular factors of `s`, the empty factor included, sorted by
/// length and then lexicographically.
pub fn bispecials_of(s: &[u8]) -> Vec<BispecialRecord> {
    let n = s.len();
    if n < 2 {
        return Vec::new();
    }
    let order = sort_rotations(s);
    let lcp = rotation_lcp(s, &order);
    let k = s.iter().copied().max().unwrap() as usize + 1;
    let bwt: Vec<u8> = order.iter().map(|&p| s[(p + n - 1) % n]).collect();
    let prefix = LetterPrefix::new(&bwt, k);

    // positions j with lcp[j] == v, ascending, for each v < n
    let mut at_value: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, &v) in lcp.iter().enumerate().skip(1) {
        if v < n {
            at_value[v].push(j);
        }
    }

    let mut out = Vec::new();
    let mut visit = |value: usize, lb: usize, rb: usize| {
        if value >= n {
            return;
        }
        let bucket = &at_value[value];
        let from = bucket.partition_point(|&j| j <= lb);
        let to = bucket.partition_point(|&j| j <= rb);
        let cuts = &bucket[from..to];
        if cuts.is_empty() {
            return;
        }
        let left = prefix.letters(lb, rb);
        if left.len() < 2 {
            return;
        }
        let mut right = LetterSet::default();
        let mut two_sided = 0;
        let mut child_lb = lb;
        for &cut in cuts.iter().chain(std::iter::once(&(rb + 1))) {
            right.insert(s[(order[child_lb] + value) % n]);
            two_sided += prefix.letters(child_lb, cut - 1).len();
            child_lb = cut;
        }
        let class = classify(left.len(), right.len(), two_sided);
        out.push((lb, BispecialRecord { start: order[lb], len: value, left, right, two_sided, class }));
    };

    // bottom-up lcp-interval traversal
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    for i in 1..=n {
        let h = lcp.get(i).copied().unwrap_or(0);
        let mut lb = i - 1;
        while h < stack.last().unwrap().0 {
            let (value, start) = stack.pop().unwrap();
            visit(value, start, i - 1);
            lb = start;
        }
        if h > stack.last().unwrap().0 {
            stack.push((h, lb));
        }
    }
    visit(0, 0, n - 1);

    out.sort_by_key(|(lb, r)| (r.len, *lb));
    out.into_iter().map(|(_, r)| r).collect()
}

/// Bispecial circular factors of `w`; refuses words longer than `cap`.
pub fn circular_bispecials(w: &Word, cap: usize) -> Result<Vec<BispecialRecord>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if w.len() > cap {
        return Err(Error::CapExceeded { predicted: BigUint::from(w.len()), cap });
    }
    Ok(bispecials_of(w.symbols()))
}
