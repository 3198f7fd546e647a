//! Runs a selection of checks over one morphism.

use num_bigint::BigUint;
use serde_json::json;

use super::{
    check_asymptotics, check_bispecial_lift, check_bispecial_run_bounds, check_r_set, check_run_recurrence,
    check_structural_decomposition, classify_and_predict, structure_covered, CheckKind, CheckVerdict, ResultsCache,
};
use crate::analysis::DEFAULT_BISPECIAL_CAP;
use crate::error::Result;
use crate::morphism::{Morphism, DEFAULT_ITERATE_CAP};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest iterate index examined.
    pub i_max: usize,
    pub cap_len: usize,
    pub cap_bispecial: usize,
    /// Length cap on `μ^{i+1}(a)` for the lift and decomposition checks.
    pub structural_cap: usize,
    pub checks: Vec<CheckKind>,
    /// Recorded in every verdict.
    pub seed: Option<u64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            i_max: 10,
            cap_len: DEFAULT_ITERATE_CAP,
            cap_bispecial: DEFAULT_BISPECIAL_CAP,
            structural_cap: 3000,
            checks: CheckKind::ALL.to_vec(),
            seed: None,
        }
    }
}

impl VerifyConfig {
    fn cache_tag(&self) -> String {
        format!("{}-{}-{}-{}", self.i_max, self.cap_len, self.cap_bispecial, self.structural_cap)
    }
}

fn fits(m: &Morphism, a: u8, i: usize, cap: usize) -> bool {
    m.length(a, i) <= BigUint::from(cap)
}

fn or_skip(result: Result<CheckVerdict>, kind: CheckKind, m: &Morphism, i: Option<usize>) -> CheckVerdict {
    result.unwrap_or_else(|e| CheckVerdict::new(kind, Some(m), i).skip(e.to_string()))
}

fn run_kind(m: &Morphism, kind: CheckKind, cfg: &VerifyConfig) -> Vec<CheckVerdict> {
    let Some(a) = m.prolongable_letter() else {
        return vec![CheckVerdict::new(kind, Some(m), None).skip("not prolongable on any letter")];
    };
    let binary = m.size() == 2;
    if !binary
        && matches!(
            kind,
            CheckKind::RSet | CheckKind::BispecialLift | CheckKind::StructuralDecomposition | CheckKind::RunRecurrence
        )
    {
        return vec![CheckVerdict::new(kind, Some(m), None).skip("binary morphisms only")];
    }
    let mut out = Vec::new();
    match kind {
        CheckKind::BispecialBounds => {
            for i in (0..=cfg.i_max).take_while(|&i| fits(m, a, i, cfg.cap_bispecial.min(cfg.cap_len))) {
                let result =
                    m.iterate(a, i, cfg.cap_len).and_then(|w| check_bispecial_run_bounds(&w, cfg.cap_bispecial));
                let mut v = or_skip(result, kind, m, Some(i));
                v.morphism = Some(m.compact());
                v.digest = Some(m.digest());
                v.i = Some(i);
                out.push(v);
            }
        }
        CheckKind::RSet => {
            for i in (1..=cfg.i_max).take_while(|&i| fits(m, a, i, cfg.cap_len)) {
                let v = or_skip(check_r_set(m, i, cfg.cap_len), kind, m, Some(i));
                let stop = v.status == super::Status::Skip;
                out.push(v);
                if stop {
                    break;
                }
            }
        }
        CheckKind::BispecialLift | CheckKind::StructuralDecomposition => {
            if let Err(reason) = structure_covered(m) {
                return vec![CheckVerdict::new(kind, Some(m), None).skip(reason)];
            }
            for i in (1..=cfg.i_max).take_while(|&i| fits(m, a, i + 1, cfg.structural_cap)) {
                let result = if kind == CheckKind::BispecialLift {
                    check_bispecial_lift(m, i, cfg.structural_cap)
                } else {
                    check_structural_decomposition(m, i, cfg.structural_cap)
                };
                out.push(or_skip(result, kind, m, Some(i)));
            }
        }
        CheckKind::RunRecurrence => {
            for i in (1..=cfg.i_max).take_while(|&i| fits(m, a, i, cfg.cap_len)) {
                out.push(or_skip(check_run_recurrence(m, i, cfg.cap_len), kind, m, Some(i)));
            }
        }
        CheckKind::Asymptotics => {
            let v = check_asymptotics(m, cfg.i_max, cfg.cap_len.min(cfg.cap_bispecial)).map(|report| report.verdict(m));
            out.push(or_skip(v, kind, m, None));
        }
        CheckKind::Classification => {
            let report = classify_and_predict(m);
            let consistent = report.periodicity.consistent != Some(false);
            out.push(CheckVerdict::new(kind, Some(m), None).judge(
                json!({
                    "factor_complexity": report.factor_complexity,
                    "r_bwt": report.r_bwt,
                    "highly_compressible": report.highly_compressible,
                    "periodicity": report.periodicity.verdict,
                }),
                json!({"empirical_period": report.periodicity.empirical}),
                consistent,
                json!({"reason": "structural periodicity verdict disagrees with the empirical period"}),
            ));
        }
    }
    if out.is_empty() {
        out.push(CheckVerdict::new(kind, Some(m), None).skip("no iterate within the caps"));
    }
    out
}

/// Verdicts in the order of `cfg.checks`, then by `i`. With a cache,
/// previously stored verdicts are reused and new ones stored.
pub fn verify_morphism(m: &Morphism, cfg: &VerifyConfig, cache: Option<&ResultsCache>) -> Vec<CheckVerdict> {
    let tag = cfg.cache_tag();
    let digest = m.digest();
    let mut out = Vec::new();
    for &kind in &cfg.checks {
        // whole-kind entries are cached under i = None as a JSON array
        let cached = cache.and_then(|c| c.get(&digest, kind, None, &tag));
        let verdicts = match cached.and_then(|v| serde_json::from_value::<Vec<CheckVerdict>>(v.observed).ok()) {
            Some(vs) => vs,
            None => {
                let vs = run_kind(m, kind, cfg);
                if let Some(c) = cache {
                    let mut bundle = CheckVerdict::new(kind, Some(m), None);
                    bundle.observed = serde_json::to_value(&vs).expect("verdicts serialize");
                    // a failed write only loses the cache entry
                    let _ = c.put(&bundle, &tag);
                }
                vs
            }
        };
        out.extend(verdicts.into_iter().map(|v| v.with_seed(cfg.seed)));
    }
    out
}
