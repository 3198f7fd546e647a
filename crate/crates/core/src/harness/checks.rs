use std::collections::{HashMap, HashSet};

use serde_json::json;

use super::{CheckKind, CheckVerdict};
use crate::analysis::{bispecials_of, r_bwt, r_set, run_boundary_bispecials, BispecialClass, CircularIndex, RSet};
use crate::error::{Error, Result};
use crate::morphism::{
    binary_shape, detect_ultimately_periodic_binary, BinaryShape, Morphism, ShapeTag, DEFAULT_PERIOD_PREFIX,
};
use crate::word::Word;

fn cap_check(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::CapExceeded { predicted: len.into(), cap });
    }
    Ok(())
}

/// Sandwich of `r_bwt` between the weak-bispecial and bispecial sums, plus
/// the boundary argument behind it: each run boundary of the transform sits
/// on a bispecial factor `u`, and no `u` sits on more than `e_r(u)` of them.
pub fn check_bispecial_run_bounds(w: &Word, cap: usize) -> Result<CheckVerdict> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    cap_check(w.len(), cap)?;
    let s = w.symbols();
    let records = bispecials_of(s);
    let lower = 1 + records
        .iter()
        .filter(|r| r.class == BispecialClass::Weak)
        .map(|r| r.e_left().min(r.e_right()))
        .sum::<usize>();
    let upper = 1 + records.iter().map(|r| r.e_right()).sum::<usize>();
    let observed = r_bwt(s);

    let index = CircularIndex::new(s);
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut bad_boundary = None;
    for b in run_boundary_bispecials(w) {
        let u = w.circular_factor(b.start, b.len);
        let right = index.right(&u).len();
        let rows = index.rows(&u).expect("boundary factor occurs");
        let times = seen.entry((b.len, rows.0)).or_default();
        *times += 1;
        if !index.is_bispecial(&u) || *times + 1 > right {
            bad_boundary.get_or_insert_with(|| json!({"boundary": b.boundary, "factor": w.alphabet().render(&u)}));
        }
    }

    let holds = lower <= observed && observed <= upper && bad_boundary.is_none();
    let witness = bad_boundary.unwrap_or_else(|| json!({"word": w.to_string()}));
    Ok(CheckVerdict::new(CheckKind::BispecialBounds, None, None).judge(
        json!({"lower": lower, "upper": upper}),
        json!({"r_bwt": observed, "bispecials": records.len()}),
        holds,
        witness,
    ))
}

fn checked_pow(base: usize, exp: usize) -> Result<usize> {
    base.checked_pow(exp as u32).ok_or(Error::Overflow("ell^h"))
}

/// `1 + ℓ + ⋯ + ℓ^{h-1}`.
fn geometric(ell: usize, h: usize) -> Result<usize> {
    let mut sum = 0usize;
    for j in 0..h {
        sum = sum.checked_add(checked_pow(ell, j)?).ok_or(Error::Overflow("geometric sum"))?;
    }
    Ok(sum)
}

/// Closed-form `R_i` for `β = b^ℓ`:
/// `{ t_j ℓ^{h-1} + k(1 + ⋯ + ℓ^{h-2}) : 1 <= h <= i, j < n_a } ∪ { k(1 + ⋯ + ℓ^{i-1}) }`.
/// With `ℓ = 1` the terms reduce to `t_j + (h-1)k` and `ik`.
pub fn predict_r_set(shape: &BinaryShape, i: usize) -> Result<RSet> {
    let ell = match (shape.tag, shape.ell) {
        (ShapeTag::AuabKB | ShapeTag::AubaKB | ShapeTag::AuabKBl, Some(ell)) => ell,
        (tag, _) => return Err(Error::ShapeNotCovered(tag)),
    };
    let k = shape.k;
    let mut set = RSet::new();
    for h in 1..=i {
        let scale = checked_pow(ell, h - 1)?;
        let shift = k.checked_mul(geometric(ell, h - 1)?).ok_or(Error::Overflow("k-shift"))?;
        for &t in &shape.t[..shape.n_a - 1] {
            let q = t.checked_mul(scale).and_then(|x| x.checked_add(shift)).ok_or(Error::Overflow("R-set term"))?;
            set.insert(q);
        }
    }
    set.insert(k.checked_mul(geometric(ell, i)?).ok_or(Error::Overflow("R-set tail"))?);
    Ok(set)
}

/// Predicted `R_i` against the scan of `μ^i(a)`.
pub fn check_r_set(m: &Morphism, i: usize, cap: usize) -> Result<CheckVerdict> {
    let verdict = CheckVerdict::new(CheckKind::RSet, Some(m), Some(i));
    let shape = binary_shape(m)?;
    let predicted = match predict_r_set(&shape, i) {
        Ok(set) => set,
        Err(Error::ShapeNotCovered(tag)) => return Ok(verdict.skip(format!("shape {tag} has no R-set formula"))),
        Err(e) => return Err(e),
    };
    let w = m.iterate(shape.a, i, cap)?;
    let observed = r_set(&w, shape.a)?;
    let diff: Vec<usize> = predicted.symmetric_difference(&observed).copied().collect();
    Ok(verdict.judge(json!(predicted), json!(observed), diff.is_empty(), json!({"symmetric_difference": diff})))
}

/// Why the structural lemmas do not apply to `m`, if they do not: they need
/// a binary morphism `(a u a b^k, b^ℓ)` with an aperiodic fixed point.
pub fn structure_covered(m: &Morphism) -> std::result::Result<BinaryShape, String> {
    let shape = binary_shape(m).map_err(|e| e.to_string())?;
    if shape.ell.is_none() {
        return Err("image of b contains a".into());
    }
    if shape.n_a < 2 {
        return Err("image of a has a single a".into());
    }
    let periodic = detect_ultimately_periodic_binary(m, DEFAULT_PERIOD_PREFIX).map_err(|e| e.to_string())?;
    if periodic.verdict.is_periodic() == Some(true) {
        return Err("fixed point is ultimately periodic".into());
    }
    Ok(shape)
}

fn lift(m: &Morphism, shape: &BinaryShape, v: &[u8]) -> Vec<u8> {
    let mut out = vec![shape.b; shape.k];
    out.extend(m.apply(v));
    out
}

/// Every `v` bispecial in `μ^i(a)` lifts to the bispecial `b^k μ(v)` of `μ^{i+1}(a)`.
pub fn check_bispecial_lift(m: &Morphism, i: usize, cap: usize) -> Result<CheckVerdict> {
    let verdict = CheckVerdict::new(CheckKind::BispecialLift, Some(m), Some(i));
    let shape = match structure_covered(m) {
        Ok(shape) => shape,
        Err(reason) => return Ok(verdict.skip(reason)),
    };
    let next = m.iterate(shape.a, i + 1, cap)?;
    let cur = m.iterate(shape.a, i, cap)?;
    let index = CircularIndex::new(next.symbols());
    let records = bispecials_of(cur.symbols());
    let mut missing = Vec::new();
    for r in &records {
        let v = r.factor(cur.symbols());
        if !index.is_bispecial(&lift(m, &shape, &v)) {
            missing.push(cur.alphabet().render(&v));
        }
    }
    Ok(verdict.judge(
        json!({"lifted": records.len()}),
        json!({"bispecial_lifts": records.len() - missing.len()}),
        missing.is_empty(),
        json!({"not_lifted": missing.iter().take(8).collect::<Vec<_>>()}),
    ))
}

/// Every bispecial of `μ^{i+1}(a)` is, in this order, (a) a circular factor
/// of some `μ(α) μ(β)^j μ(α)` with `j <= M`, (b) a lift `b^k μ(v)` of a
/// bispecial `v` of `μ^i(a)`, or (c) a power of `b` when `ℓ > 1`.
pub fn check_structural_decomposition(m: &Morphism, i: usize, cap: usize) -> Result<CheckVerdict> {
    let verdict = CheckVerdict::new(CheckKind::StructuralDecomposition, Some(m), Some(i));
    let shape = match structure_covered(m) {
        Ok(shape) => shape,
        Err(reason) => return Ok(verdict.skip(reason)),
    };
    let ell = shape.ell.expect("covered shapes have β = b^ℓ");
    let bound = shape.m_bound.expect("covered shapes have M");
    let next = m.iterate(shape.a, i + 1, cap)?;
    let cur = m.iterate(shape.a, i, cap)?;

    let alpha_image = m.apply(m.image(shape.a));
    let beta_image = m.apply(m.image(shape.b));
    let blocks: Vec<Vec<u8>> = (0..=bound)
        .map(|j| {
            let mut x = alpha_image.clone();
            for _ in 0..j {
                x.extend_from_slice(&beta_image);
            }
            x.extend_from_slice(&alpha_image);
            x
        })
        .collect();
    let block_indexes: Vec<CircularIndex> = blocks.iter().map(|x| CircularIndex::new(x)).collect();
    let in_block = |u: &[u8]| {
        blocks.iter().zip(&block_indexes).any(|(x, idx)| {
            if u.len() < x.len() {
                idx.rows(u).is_some()
            } else {
                u.len() == x.len() && (0..x.len()).any(|r| x[r..].iter().chain(&x[..r]).eq(u.iter()))
            }
        })
    };
    let lifts: HashSet<Vec<u8>> =
        bispecials_of(cur.symbols()).iter().map(|r| lift(m, &shape, &r.factor(cur.symbols()))).collect();

    let (mut by_block, mut by_lift, mut by_power) = (0usize, 0usize, 0usize);
    let mut uncovered = Vec::new();
    let records = bispecials_of(next.symbols());
    for r in &records {
        let u = r.factor(next.symbols());
        if in_block(&u) {
            by_block += 1;
        } else if lifts.contains(&u) {
            by_lift += 1;
        } else if ell > 1 && u.iter().all(|&c| c == shape.b) {
            by_power += 1;
        } else {
            uncovered.push(next.alphabet().render(&u));
        }
    }
    Ok(verdict.judge(
        json!({"bispecials": records.len(), "M": bound}),
        json!({"block_factor": by_block, "lift": by_lift, "b_power": by_power, "uncovered": uncovered.len()}),
        uncovered.is_empty(),
        json!({"uncovered": uncovered.iter().take(8).collect::<Vec<_>>()}),
    ))
}
