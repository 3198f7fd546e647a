//! Burrows–Wheeler transform over all cyclic rotations, without a sentinel.

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BwtResult {
    /// Last letters of the sorted rotations.
    pub transformed: Word,
    /// `order[j]` is the start index of the `j`-th smallest rotation.
    pub order: Vec<usize>,
    /// Every `j` with `transformed[j] != transformed[j + 1]`.
    pub boundaries: Vec<usize>,
}

impl BwtResult {
    pub fn r_bwt(&self) -> usize {
        self.boundaries.len() + 1
    }
}

fn counting_sort_by(keys: &[usize], items: &[usize], classes: usize) -> Vec<usize> {
    let mut count = vec![0usize; classes + 1];
    for &i in items {
        count[keys[i] + 1] += 1;
    }
    for c in 1..count.len() {
        count[c] += count[c - 1];
    }
    let mut out = vec![0; items.len()];
    for &i in items {
        out[count[keys[i]]] = i;
        count[keys[i]] += 1;
    }
    out
}

/// Sorts the cyclic rotations of `s` by prefix doubling with counting sorts.
/// Equal rotations are ordered by start index.
pub fn sort_rotations(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let idx: Vec<usize> = (0..n).collect();
    let sym: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    let alphabet = sym.iter().copied().max().unwrap_or(0) + 1;
    let mut order = counting_sort_by(&sym, &idx, alphabet);
    let mut class = vec![0usize; n];
    let mut classes = 1;
    for j in 1..n {
        if s[order[j]] != s[order[j - 1]] {
            classes += 1;
        }
        class[order[j]] = classes - 1;
    }

    let mut h = 1;
    while h < n && classes < n {
        // sort by second half, then stably by first half
        let shifted: Vec<usize> = order.iter().map(|&p| (p + n - h) % n).collect();
        order = counting_sort_by(&class, &shifted, classes);
        let mut next = vec![0usize; n];
        classes = 1;
        for j in 1..n {
            let cur = (class[order[j]], class[(order[j] + h) % n]);
            let prev = (class[order[j - 1]], class[(order[j - 1] + h) % n]);
            if cur != prev {
                classes += 1;
            }
            next[order[j]] = classes - 1;
        }
        class = next;
        h *= 2;
    }
    counting_sort_by(&class, &idx, classes)
}

/// Length of the shortest `d` with `s = u^{n/d}`, `|u| = d`.
pub fn primitive_root_len(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// `lcp[j]` is the longest common prefix of rotations `order[j - 1]` and
/// `order[j]`, capped at `n`; `lcp[0] = 0`.
pub fn rotation_lcp(s: &[u8], order: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0usize; n];
    if n < 2 {
        return lcp;
    }
    // Rotations of the primitive root are pairwise distinct, which is what
    // the Kasai argument needs. Equal rotations of the full word get lcp n.
    let d = primitive_root_len(s);
    let root_order: Vec<usize> = order.iter().copied().filter(|&p| p < d).collect();
    let mut root_rank = vec![0usize; d];
    for (r, &p) in root_order.iter().enumerate() {
        root_rank[p] = r;
    }
    let mut root_lcp = vec![0usize; d];
    let mut h = 0usize;
    for i in 0..d {
        if root_rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = root_order[root_rank[i] - 1];
        while h < d && s[(i + h) % d] == s[(j + h) % d] {
            h += 1;
        }
        root_lcp[root_rank[i]] = h;
        h = h.saturating_sub(1);
    }
    for j in 1..n {
        let (p, q) = (order[j - 1], order[j]);
        lcp[j] = if p % d == q % d { n } else { root_lcp[root_rank[q % d]] };
    }
    lcp
}

/// Transformed symbols only.
pub fn bwt_symbols(s: &[u8]) -> Vec<u8> {
    let n = s.len();
    sort_rotations(s).iter().map(|&p| s[(p + n - 1) % n]).collect()
}

pub fn bwt(w: &Word) -> Result<BwtResult> {
    let s = w.symbols();
    if s.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = s.len();
    let order = sort_rotations(s);
    let transformed: Vec<u8> = order.iter().map(|&p| s[(p + n - 1) % n]).collect();
    let boundaries = (0..n - 1).filter(|&j| transformed[j] != transformed[j + 1]).collect();
    Ok(BwtResult { transformed: Word::from_ranks(w.alphabet().clone(), transformed), order, boundaries })
}

/// Number of runs of the transform of `s`; 0 for the empty word.
pub fn r_bwt(s: &[u8]) -> usize {
    super::run_count(&bwt_symbols(s))
}
