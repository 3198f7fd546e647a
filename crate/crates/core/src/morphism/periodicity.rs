//! Ultimate periodicity of fixed points.
//!
//! For binary morphisms prolongable on `a` the fixed point is ultimately
//! periodic exactly in four structural cases, so the matcher below is a
//! decision procedure. Larger alphabets only get the empirical test.

use serde::Serialize;

use super::{binary_shape, Morphism};
use crate::error::{Error, Result};

/// Prefix length of the fixed point used by the empirical period test.
pub const DEFAULT_PERIOD_PREFIX: usize = 8192;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Periodicity {
    /// `α = η^i`, `β = η^j` for a primitive word `η`.
    #[serde(rename = "periodic-shape-1")]
    CommonRoot { root: String, alpha_power: usize, beta_power: usize },
    /// `α = a b^k`, `β = b^ℓ`.
    #[serde(rename = "periodic-shape-2")]
    AbkBl { k: usize, ell: usize },
    /// `α = (ab)^p a`, `β = (ba)^q b`.
    #[serde(rename = "periodic-shape-3")]
    Alternating { p: usize, q: usize },
    /// `α = (a b^p)^q a`, `β = b`.
    #[serde(rename = "periodic-shape-4")]
    AbpQa { p: usize, q: usize },
    /// `α = a^p`: the fixed point is `a^∞`.
    #[serde(rename = "periodic-unary")]
    Unary { power: usize },
    #[serde(rename = "aperiodic")]
    Aperiodic,
    #[serde(rename = "empirical-periodic")]
    EmpiricallyPeriodic { preperiod: usize, period: usize },
    #[serde(rename = "empirical-aperiodic")]
    EmpiricallyAperiodic,
    /// No prolongable letter, so there is no fixed point to examine.
    #[serde(rename = "unknown")]
    Unknown,
}

impl Periodicity {
    /// `Some(true)` for ultimately periodic fixed points, `None` when unknown.
    pub fn is_periodic(&self) -> Option<bool> {
        match self {
            Periodicity::Aperiodic | Periodicity::EmpiricallyAperiodic => Some(false),
            Periodicity::Unknown => None,
            _ => Some(true),
        }
    }

    /// Structural case index for binary periodic verdicts.
    pub fn case(&self) -> Option<u8> {
        match self {
            Periodicity::CommonRoot { .. } => Some(1),
            Periodicity::AbkBl { .. } => Some(2),
            Periodicity::Alternating { .. } => Some(3),
            Periodicity::AbpQa { .. } => Some(4),
            _ => None,
        }
    }

    pub fn is_empirical(&self) -> bool {
        matches!(self, Periodicity::EmpiricallyPeriodic { .. } | Periodicity::EmpiricallyAperiodic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmpiricalPeriod {
    pub prefix_len: usize,
    pub preperiod: usize,
    pub period: usize,
    /// `4 (preperiod + period) <= prefix_len`.
    pub looks_periodic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    #[serde(flatten)]
    pub verdict: Periodicity,
    pub empirical: Option<EmpiricalPeriod>,
    /// Structural verdict and empirical test agree.
    pub consistent: Option<bool>,
}

fn min_period(w: &[u8]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

/// Minimal period of the second half of `w`, extended leftwards as far as it
/// holds; the start of that periodic suffix is the preperiod.
pub fn empirical_period(w: &[u8]) -> EmpiricalPeriod {
    let n = w.len();
    let period = min_period(&w[n / 2..]);
    let mut preperiod = n.saturating_sub(period);
    while preperiod > 0 && w[preperiod - 1] == w[preperiod - 1 + period] {
        preperiod -= 1;
    }
    if period == 0 {
        preperiod = 0;
    }
    EmpiricalPeriod { prefix_len: n, preperiod, period, looks_periodic: n > 0 && 4 * (preperiod + period) <= n }
}

fn primitive_root(w: &[u8]) -> usize {
    let n = w.len();
    (1..=n).find(|&d| n.is_multiple_of(d) && w.chunks(d).all(|c| c == &w[..d])).unwrap_or(n)
}

/// Runs `t_1..t_n` of `b` after each `a` in `α`.
fn b_runs_after_a(alpha: &[u8], a: u8) -> Vec<usize> {
    let mut t = Vec::new();
    for &x in alpha {
        if x == a {
            t.push(0);
        } else if let Some(last) = t.last_mut() {
            *last += 1;
        }
    }
    t
}

fn match_binary(m: &Morphism, a: u8) -> Periodicity {
    let b = 1 - a;
    let alpha = m.image(a);
    let beta = m.image(b);

    let ab: Vec<u8> = alpha.iter().chain(beta).copied().collect();
    let ba: Vec<u8> = beta.iter().chain(alpha).copied().collect();
    if ab == ba {
        let d = primitive_root(alpha);
        return Periodicity::CommonRoot {
            root: m.alphabet().render(&alpha[..d]),
            alpha_power: alpha.len() / d,
            beta_power: beta.len() / d,
        };
    }

    let beta_is_b_power = beta.iter().all(|&x| x == b);
    let t = b_runs_after_a(alpha, a);

    if beta_is_b_power && t.len() == 1 && t[0] >= 1 {
        return Periodicity::AbkBl { k: t[0], ell: beta.len() };
    }

    let alternating_from =
        |w: &[u8], first: u8| w.iter().enumerate().all(|(i, &x)| x == if i % 2 == 0 { first } else { 1 - first });
    if alpha.len() >= 3
        && alpha.len() % 2 == 1
        && alternating_from(alpha, a)
        && beta.len() >= 3
        && beta.len() % 2 == 1
        && alternating_from(beta, b)
    {
        return Periodicity::Alternating { p: alpha.len() / 2, q: beta.len() / 2 };
    }

    if beta == [b] && t.len() >= 2 && *t.last().unwrap() == 0 {
        let p = t[0];
        if p >= 1 && t[..t.len() - 1].iter().all(|&x| x == p) {
            return Periodicity::AbpQa { p, q: t.len() - 1 };
        }
    }

    if t.iter().all(|&x| x == 0) {
        return Periodicity::Unary { power: alpha.len() };
    }
    Periodicity::Aperiodic
}

fn empirical_for(m: &Morphism, a: u8, cap: usize) -> Result<EmpiricalPeriod> {
    let len = cap.clamp(2, DEFAULT_PERIOD_PREFIX);
    Ok(empirical_period(&m.fixed_point_prefix(a, len)?))
}

/// Structural classification of a binary morphism's fixed point, with the
/// empirical period test on a prefix of at most `min(cap, 8192)` symbols.
pub fn detect_ultimately_periodic_binary(m: &Morphism, cap: usize) -> Result<PeriodicityReport> {
    let shape = binary_shape(m)?;
    let verdict = match_binary(m, shape.a);
    let empirical = empirical_for(m, shape.a, cap)?;
    let consistent = verdict.is_periodic() == Some(empirical.looks_periodic);
    Ok(PeriodicityReport { verdict, empirical: Some(empirical), consistent: Some(consistent) })
}

/// Structural verdict for binary morphisms, empirical verdict otherwise.
pub fn detect_periodicity(m: &Morphism, cap: usize) -> PeriodicityReport {
    match detect_ultimately_periodic_binary(m, cap) {
        Ok(report) => report,
        Err(Error::NotBinary(_)) | Err(Error::NoProlongableLetter) => {
            let Some(a) = m.prolongable_letter() else {
                return PeriodicityReport { verdict: Periodicity::Unknown, empirical: None, consistent: None };
            };
            let empirical = empirical_for(m, a, cap).expect("a is prolongable");
            let verdict = if empirical.looks_periodic {
                Periodicity::EmpiricallyPeriodic { preperiod: empirical.preperiod, period: empirical.period }
            } else {
                Periodicity::EmpiricallyAperiodic
            };
            PeriodicityReport { verdict, empirical: Some(empirical), consistent: None }
        }
        Err(e) => unreachable!("binary_shape only fails on arity or prolongability: {e}"),
    }
}
