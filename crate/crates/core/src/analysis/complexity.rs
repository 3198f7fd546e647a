//! Factor counts and the δ measure.

use std::collections::HashSet;

use num_rational::Ratio;

use super::bwt::sort_rotations;
use crate::error::{Error, Result};
use crate::word::Word;

fn check_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::LengthOutOfRange { k, n });
    }
    Ok(())
}

/// Distinct factors of length `k`.
pub fn factor_complexity(w: &Word, k: usize) -> Result<usize> {
    let s = w.symbols();
    check_range(s.len(), k)?;
    if k == 0 {
        return Ok(1);
    }
    Ok(s.windows(k).collect::<HashSet<_>>().len())
}

/// Distinct circular factors of length `k`: windows of `ww` starting in `0..n`.
pub fn circular_complexity(w: &Word, k: usize) -> Result<usize> {
    let s = w.symbols();
    let n = s.len();
    check_range(n, k)?;
    if k == 0 {
        return Ok(1);
    }
    let doubled: Vec<u8> = s.iter().chain(s).copied().collect();
    Ok((0..n).map(|i| &doubled[i..i + k]).collect::<HashSet<_>>().len())
}

/// Suffix array of `s`, via rotations of `s` followed by a sentinel.
pub fn suffix_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut t: Vec<u8> = s.iter().map(|&c| c + 1).collect();
    t.push(0);
    let order = sort_rotations(&t);
    debug_assert_eq!(order[0], n);
    order[1..].to_vec()
}

/// Kasai: `lcp[j]` = longest common prefix of suffixes `sa[j - 1]` and `sa[j]`.
pub fn suffix_lcp(s: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut rank = vec![0usize; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// `f(k)` for every `k` in `0..=n`.
///
/// Suffix `sa[j]` contributes a new factor for each length in
/// `lcp[j] + 1 ..= n - sa[j]`.
pub fn factor_counts(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let sa = suffix_array(s);
    let lcp = suffix_lcp(s, &sa);
    let mut diff = vec![0i64; n + 2];
    for (j, &p) in sa.iter().enumerate() {
        let (lo, hi) = (lcp[j] + 1, n - p);
        if lo <= hi {
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
    }
    let mut counts = vec![1usize; n + 1];
    let mut acc = 0i64;
    for k in 1..=n {
        acc += diff[k];
        counts[k] = acc as usize;
    }
    counts
}

/// `max_{1<=k<=n} f(k) / k`, exact.
pub fn delta(w: &Word) -> Result<Ratio<u64>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let counts = factor_counts(w.symbols());
    let (mut num, mut den) = (counts[1] as u64, 1u64);
    for (k, &f) in counts.iter().enumerate().skip(2) {
        if (f as u64) * den > num * k as u64 {
            num = f as u64;
            den = k as u64;
        }
    }
    Ok(Ratio::new(num, den))
}

/// `δ log₂(max(δ,2)) max(1, log₂(n / (δ log₂(max(δ,2)))))`.
pub fn kk_bound_from(delta: Ratio<u64>, n: usize) -> f64 {
    let d = *delta.numer() as f64 / *delta.denom() as f64;
    let base = d * d.max(2.0).log2();
    base * (n as f64 / base).log2().max(1.0)
}

pub fn kk_bound(w: &Word) -> Result<f64> {
    Ok(kk_bound_from(delta(w)?, w.len()))
}
