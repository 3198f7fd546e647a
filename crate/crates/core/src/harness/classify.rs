use serde::Serialize;

use crate::morphism::{
    binary_shape, bounded_letters, classify_growth, detect_periodicity, BinaryShape, GrowthClass, GrowthReport,
    Morphism, Periodicity, PeriodicityReport, ShapeTag, DEFAULT_PERIOD_PREFIX,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComplexityClass {
    #[serde(rename = "Θ(n)")]
    Linear,
    #[serde(rename = "Θ(n log log n)")]
    NLogLogN,
    #[serde(rename = "Θ(n log n)")]
    NLogN,
    #[serde(rename = "Θ(n²)")]
    Quadratic,
    #[serde(rename = "ultimately-periodic")]
    UltimatelyPeriodic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RbwtClass {
    #[serde(rename = "Θ(1)")]
    Constant,
    #[serde(rename = "O(log n)")]
    AtMostLog,
    #[serde(rename = "Θ(log n)")]
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Compressibility {
    Yes,
    No,
    ExcludedShape,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub morphism: String,
    pub digest: String,
    pub primitive: bool,
    pub growth: GrowthReport,
    pub periodicity: PeriodicityReport,
    pub shape: Option<BinaryShape>,
    pub factor_complexity: Option<ComplexityClass>,
    pub r_bwt: Option<RbwtClass>,
    pub highly_compressible: Option<Compressibility>,
    pub notes: Vec<String>,
}

/// `μ ≡ (a b^m, b^n)`, `m, n >= 1`.
fn is_excluded_shape(m: &Morphism, shape: &BinaryShape) -> bool {
    shape.ell.is_some() && shape.n_a == 1 && shape.k >= 1 && m.image(shape.a).len() == shape.k + 1
}

/// Longest factor over bounded letters in the fixed-point prefix of each
/// length, used to tell whether such blocks keep growing.
fn bounded_blocks_grow(m: &Morphism, a: u8) -> bool {
    let bounded = bounded_letters(m);
    let longest = |len: usize| {
        let x = m.fixed_point_prefix(a, len).expect("a is prolongable");
        let mut best = 0;
        let mut cur = 0;
        for c in x {
            cur = if bounded.contains(&c) { cur + 1 } else { 0 };
            best = best.max(cur);
        }
        best
    };
    let sizes = [1usize << 10, 1 << 12, 1 << 14, 1 << 16];
    let found: Vec<usize> = sizes.iter().map(|&n| longest(n)).collect();
    found.windows(2).all(|w| w[1] > w[0])
}

fn pansiot(growth: GrowthClass) -> Option<ComplexityClass> {
    match growth {
        GrowthClass::QuasiUniform => Some(ComplexityClass::Linear),
        GrowthClass::PolynomiallyDivergent => Some(ComplexityClass::NLogLogN),
        GrowthClass::ExponentiallyDivergent => Some(ComplexityClass::NLogN),
        GrowthClass::NotGrowing => None,
    }
}

/// Predicted factor complexity, `r_bwt` behaviour and BWT compressibility.
pub fn classify_and_predict(m: &Morphism) -> ClassificationReport {
    let primitive = m.is_primitive();
    let growth = classify_growth(m);
    let periodicity = detect_periodicity(m, DEFAULT_PERIOD_PREFIX);
    let shape = binary_shape(m).ok();
    let mut report = ClassificationReport {
        morphism: m.compact(),
        digest: m.digest(),
        primitive,
        growth,
        periodicity,
        shape,
        factor_complexity: None,
        r_bwt: None,
        highly_compressible: None,
        notes: Vec::new(),
    };
    match report.shape.clone() {
        Some(shape) => classify_binary(m, &shape, &mut report),
        None => classify_other(m, &mut report),
    }
    report
}

fn classify_binary(m: &Morphism, shape: &BinaryShape, report: &mut ClassificationReport) {
    let excluded = is_excluded_shape(m, shape) || shape.alpha_is_unary();
    let compressible = if excluded { Compressibility::ExcludedShape } else { Compressibility::Yes };
    report.highly_compressible = Some(compressible);

    if report.periodicity.verdict.is_periodic() == Some(true) {
        report.factor_complexity = Some(ComplexityClass::UltimatelyPeriodic);
        report.r_bwt = Some(RbwtClass::Constant);
        if let Periodicity::AbpQa { .. } = report.periodicity.verdict {
            if shape.tag == ShapeTag::AubaKB {
                report.notes.push("u of the form (b^p a)^q b^(p-1) makes the fixed point periodic".into());
            }
        }
        return;
    }
    if report.primitive {
        report.factor_complexity = Some(ComplexityClass::Linear);
        report.r_bwt = Some(RbwtClass::AtMostLog);
        return;
    }
    match (shape.ell, shape.tag) {
        (Some(1), ShapeTag::AubaKB) => {
            report.factor_complexity = Some(ComplexityClass::Linear);
            report.r_bwt = Some(RbwtClass::AtMostLog);
        }
        (Some(1), ShapeTag::AuabKB) => {
            report.factor_complexity = Some(ComplexityClass::Quadratic);
            report.r_bwt = Some(RbwtClass::Log);
        }
        (Some(ell), _) if ell >= 2 => {
            report.factor_complexity = Some(match shape.n_a.cmp(&ell) {
                std::cmp::Ordering::Less => ComplexityClass::Linear,
                std::cmp::Ordering::Equal => ComplexityClass::NLogLogN,
                std::cmp::Ordering::Greater => ComplexityClass::NLogN,
            });
            report.r_bwt = Some(RbwtClass::Log);
        }
        _ => report.notes.push("shape outside the binary decision table".into()),
    }
}

fn classify_other(m: &Morphism, report: &mut ClassificationReport) {
    report.notes.push(format!("alphabet of size {}: growth-based prediction only", m.size()));
    let Some(a) = m.prolongable_letter() else {
        report.notes.push("not prolongable on any letter".into());
        return;
    };
    if report.periodicity.verdict.is_periodic() == Some(true) {
        report.factor_complexity = Some(ComplexityClass::UltimatelyPeriodic);
        report.r_bwt = Some(RbwtClass::Constant);
        return;
    }
    if report.primitive {
        report.factor_complexity = Some(ComplexityClass::Linear);
        report.r_bwt = Some(RbwtClass::AtMostLog);
        report.highly_compressible = Some(Compressibility::Yes);
        return;
    }
    report.factor_complexity = pansiot(report.growth.class);
    if report.growth.class == GrowthClass::NotGrowing {
        if bounded_blocks_grow(m, a) {
            report.factor_complexity = Some(ComplexityClass::Quadratic);
            report.notes.push("bounded-letter blocks grow (empirical)".into());
        } else {
            report.notes.push("bounded-letter blocks stay short: complexity undetermined".into());
        }
    }
}
