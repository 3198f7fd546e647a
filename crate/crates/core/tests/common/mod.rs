//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; inputs are plain rank slices.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use morphic_bwt::{Alphabet, Morphism, Word};

pub fn word(symbols: &[u8], k: usize) -> Word {
    let letters = "abcdefghijklmnopqrstuvwxyz".chars().take(k);
    Word::from_ranks(Alphabet::new(letters).unwrap(), symbols.to_vec())
}

/// Sorts every rotation as an owned vector.
pub fn naive_bwt(s: &[u8]) -> Vec<u8> {
    let n = s.len();
    let mut rotations: Vec<Vec<u8>> = (0..n).map(|i| s[i..].iter().chain(&s[..i]).copied().collect()).collect();
    rotations.sort();
    rotations.iter().map(|r| r[n - 1]).collect()
}

pub fn naive_runs(s: &[u8]) -> usize {
    if s.is_empty() {
        return 0;
    }
    1 + s.windows(2).filter(|p| p[0] != p[1]).count()
}

pub fn naive_r_bwt(s: &[u8]) -> usize {
    naive_runs(&naive_bwt(s))
}

/// Left letters, right letters and two-sided pairs of one circular factor.
#[derive(Clone, Debug, Default)]
pub struct Extensions {
    pub left: BTreeSet<u8>,
    pub right: BTreeSet<u8>,
    pub pairs: BTreeSet<(u8, u8)>,
}

/// All circular bispecial factors with their extensions, found by listing
/// the length-`L+2` windows of the doubled word for every `L`.
pub fn naive_bispecials(s: &[u8]) -> BTreeMap<Vec<u8>, Extensions> {
    let n = s.len();
    let mut out = BTreeMap::new();
    let at = |p: usize| s[p % n];
    for len in 0..n.saturating_sub(1) {
        let mut table: BTreeMap<Vec<u8>, Extensions> = BTreeMap::new();
        for p in 0..n {
            let u: Vec<u8> = (1..=len).map(|j| at(p + j)).collect();
            let (x, y) = (at(p), at(p + len + 1));
            let e = table.entry(u).or_default();
            e.left.insert(x);
            e.right.insert(y);
            e.pairs.insert((x, y));
        }
        let mut any_right_special = false;
        for (u, e) in table {
            any_right_special |= e.right.len() > 1;
            if e.left.len() > 1 && e.right.len() > 1 {
                out.insert(u, e);
            }
        }
        // prefixes of right-special factors are right special
        if !any_right_special {
            break;
        }
    }
    out
}

/// `1 + Σ_weak min(e_l, e_r)` and `1 + Σ e_r` over the naive bispecials.
pub fn naive_sandwich(s: &[u8]) -> (usize, usize) {
    let bs = naive_bispecials(s);
    let mut lower = 1;
    let mut upper = 1;
    for e in bs.values() {
        let (l, r) = (e.left.len(), e.right.len());
        upper += r - 1;
        if e.pairs.len() == l.max(r) && e.pairs.len() != l * r {
            lower += (l - 1).min(r - 1);
        }
    }
    (lower, upper)
}

/// Gaps `q` with `a b^q a` a factor of the word repeated three times.
pub fn naive_r_set(s: &[u8], a: u8) -> BTreeSet<usize> {
    let n = s.len();
    let tripled: Vec<u8> = s.iter().chain(s).chain(s).copied().collect();
    let mut out = BTreeSet::new();
    for start in 0..n {
        if tripled[start] != a {
            continue;
        }
        for q in 0..=n {
            let end = start + q + 1;
            if end >= tripled.len() {
                break;
            }
            if tripled[end] == a {
                out.insert(q);
                break;
            }
        }
    }
    out
}

/// `φ^i(c)` by plain substitution, `None` past `cap`.
pub fn naive_iterate(m: &Morphism, c: u8, i: usize, cap: usize) -> Option<Vec<u8>> {
    let mut w = vec![c];
    for _ in 0..i {
        let next: Vec<u8> = w.iter().flat_map(|&x| m.image(x).iter().copied()).collect();
        if next.len() > cap {
            return None;
        }
        w = next;
    }
    Some(w)
}

/// `|φ^i(c)|` by squaring the incidence matrix, `M[x][y] = |φ(x)|_y`.
pub fn matrix_power_length(m: &Morphism, c: u8, i: usize) -> BigUint {
    let k = m.size();
    let base: Vec<Vec<BigUint>> = (0..k as u8)
        .map(|x| (0..k as u8).map(|y| BigUint::from(m.image(x).iter().filter(|&&z| z == y).count())).collect())
        .collect();
    let mul = |p: &Vec<Vec<BigUint>>, q: &Vec<Vec<BigUint>>| -> Vec<Vec<BigUint>> {
        (0..k).map(|r| (0..k).map(|col| (0..k).map(|j| &p[r][j] * &q[j][col]).sum()).collect()).collect()
    };
    let mut acc: Vec<Vec<BigUint>> =
        (0..k).map(|r| (0..k).map(|col| BigUint::from((r == col) as u8)).collect()).collect();
    let mut sq = base;
    let mut e = i;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &sq);
        }
        sq = mul(&sq, &sq);
        e >>= 1;
    }
    acc[c as usize].iter().sum()
}
