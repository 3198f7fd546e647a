use std::fmt;

use serde::Serialize;

use super::Morphism;
use crate::error::{Error, Result};

/// Structural family of a binary morphism `(α, β)` prolongable on `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ShapeTag {
    /// `α` ends in `a b^k`, `k >= 1`, and `β = b`.
    #[serde(rename = "auab^k_b")]
    AuabKB,
    /// `α` ends in `b a^k`, `k >= 1`, and `β = b`.
    #[serde(rename = "auba^k_b")]
    AubaKB,
    /// `β = b^ℓ` with `ℓ >= 2`.
    #[serde(rename = "auab^k_bl")]
    AuabKBl,
    #[serde(rename = "primitive")]
    Primitive,
    #[serde(rename = "other")]
    Other,
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeTag::AuabKB => "auab^k_b",
            ShapeTag::AubaKB => "auba^k_b",
            ShapeTag::AuabKBl => "auab^k_bl",
            ShapeTag::Primitive => "primitive",
            ShapeTag::Other => "other",
        })
    }
}

/// `α = a b^{t_1} a b^{t_2} ⋯ a b^{t_{n_a}}` together with the data the
/// R-set and structural lemmas are stated in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryShape {
    /// The letter called `a`: the first letter the morphism is prolongable on.
    pub prolongable: char,
    /// The other letter, called `b`.
    pub other: char,
    #[serde(skip)]
    pub a: u8,
    #[serde(skip)]
    pub b: u8,
    /// Length of the trailing `b`-run of `α`.
    pub k: usize,
    /// `β = b^ℓ`, or `None` when `β` contains `a`.
    pub ell: Option<usize>,
    pub n_a: usize,
    /// `t_1, …, t_{n_a}`.
    pub t: Vec<usize>,
    pub tag: ShapeTag,
    /// Longest `b`-run inside `α`.
    pub m: usize,
    /// `max(⌊(m − (ℓ+1)k) / ℓ²⌋, 0)`, when `β = b^ℓ`.
    #[serde(rename = "M")]
    pub m_bound: Option<usize>,
}

impl BinaryShape {
    /// `α = a^p` for some `p`: the fixed point is `a^∞`.
    pub fn alpha_is_unary(&self) -> bool {
        self.t.iter().all(|&t| t == 0)
    }
}

pub fn binary_shape(m: &Morphism) -> Result<BinaryShape> {
    if m.size() != 2 {
        return Err(Error::NotBinary(m.size()));
    }
    let a = m.prolongable_letter().ok_or(Error::NoProlongableLetter)?;
    let b = 1 - a;
    let alpha = m.image(a);
    let beta = m.image(b);

    let mut t = Vec::new();
    for &x in alpha {
        if x == a {
            t.push(0);
        } else {
            *t.last_mut().expect("α starts with a") += 1;
        }
    }
    let n_a = t.len();
    let k = *t.last().expect("n_a >= 1");
    let m_run = t.iter().copied().max().unwrap_or(0);
    let ell = beta.iter().all(|&x| x == b).then_some(beta.len());

    let m_bound = ell.map(|l| {
        let num = m_run as i64 - (l as i64 + 1) * k as i64;
        let den = (l * l) as i64;
        num.div_euclid(den).max(0) as usize
    });

    let contains_b = alpha.contains(&b);
    let tag = match ell {
        Some(1) if k >= 1 => ShapeTag::AuabKB,
        Some(1) if contains_b => ShapeTag::AubaKB,
        Some(l) if l >= 2 => ShapeTag::AuabKBl,
        _ if m.is_primitive() => ShapeTag::Primitive,
        _ => ShapeTag::Other,
    };

    Ok(BinaryShape {
        prolongable: m.alphabet().letter(a),
        other: m.alphabet().letter(b),
        a,
        b,
        k,
        ell,
        n_a,
        t,
        tag,
        m: m_run,
        m_bound,
    })
}
