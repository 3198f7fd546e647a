//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{matrix_power_length, naive_bwt, naive_iterate, naive_r_bwt, naive_r_set, naive_sandwich, word};
use morphic_bwt::analysis::{bwt_symbols, r_bwt, r_set, run_count};
use morphic_bwt::harness::{
    builtin_corpus, check_bispecial_lift, check_bispecial_run_bounds, check_run_recurrence,
    check_structural_decomposition, classify_and_predict, predict_r_set, random_morphism, random_shape_morphism,
    structure_covered, ComplexityClass, RbwtClass, ShapeFamily,
};
use morphic_bwt::morphism::binary_shape;
use morphic_bwt::Morphism;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const CAP: usize = 10_000_000;

fn corpus(name: &str) -> Morphism {
    builtin_corpus().into_iter().find(|e| e.name == name).expect("corpus entry").morphism()
}

fn stats(m: &Morphism, i: usize) -> (usize, usize, usize) {
    let w = m.iterate(0, i, CAP).unwrap();
    (w.len(), run_count(w.symbols()), r_bwt(w.symbols()))
}

fn fits(m: &Morphism, i: usize, cap: usize) -> bool {
    m.length(0, i) <= BigUint::from(cap)
}

fn example_phi() -> Outcome {
    let start = Instant::now();
    let m = corpus("phi");
    let mut max_n = 0;
    for i in 3..=10 {
        let (n, r, rb) = stats(&m, i);
        max_n = max_n.max(n);
        if r != 1 << (i + 1) || rb != 2 * i {
            return Err(format!("i={i}: r={r} r_bwt={rb}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("i=3..10 exact, max n={max_n}"))
}

fn three_letter_example(name: &str, range: std::ops::RangeInclusive<usize>) -> Outcome {
    let m = corpus(name);
    for i in range.clone() {
        let (_, r, rb) = stats(&m, i);
        if r != 2 * i + 1 || rb != 4 * i {
            return Err(format!("i={i}: r={r} r_bwt={rb}"));
        }
        // ρ = 4i/(2i+1) = 2 - 2/(2i+1), checked by cross-multiplication
        if rb * (2 * i + 1) != (2 * (2 * i + 1) - 2) * r || rb <= r {
            return Err(format!("i={i}: rho mismatch"));
        }
    }
    Ok(format!("r=2i+1, r_bwt=4i for i={}..{}", range.start(), range.end()))
}

fn chain_band() -> Outcome {
    let mut notes = Vec::new();
    for k in 3..=5 {
        let m = corpus(&format!("phi{k}"));
        for i in 0..=30 {
            let predicted = m.length(0, i);
            if predicted != matrix_power_length(&m, 0, i) {
                return Err(format!("k={k} i={i}: length {predicted} disagrees with matrix power"));
            }
            if let Some(w) = naive_iterate(&m, 0, i, 1 << 20) {
                if BigUint::from(w.len()) != predicted {
                    return Err(format!("k={k} i={i}: substituted length {}", w.len()));
                }
            }
        }
        let ratios: Vec<f64> = (5..=30).map(|i| stats(&m, i).2 as f64 / i as f64).collect();
        let c1 = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let c2 = ratios.iter().copied().fold(0.0, f64::max);
        if c2 / c1 > 3.0 {
            return Err(format!("k={k}: r_bwt/i in [{c1:.3}, {c2:.3}], spread {:.3}", c2 / c1));
        }
        notes.push(format!("k={k} [{c1:.2},{c2:.2}]"));
    }
    Ok(format!("lengths exact to i=30; bands {}", notes.join(" ")))
}

fn fibonacci_constant() -> Outcome {
    let m = corpus("fibonacci");
    for i in 2..=15 {
        let w = m.iterate(0, i, CAP).unwrap();
        let rb = r_bwt(w.symbols());
        if rb != 2 {
            return Err(format!("i={i}: r_bwt={rb}"));
        }
        if i <= 8 && naive_r_bwt(w.symbols()) != 2 {
            return Err(format!("i={i}: naive oracle disagrees"));
        }
    }
    Ok("r_bwt=2 for i=2..15, naive oracle to i=8".into())
}

fn thue_morse_linear() -> Outcome {
    let m = corpus("tm");
    let values: Vec<(usize, usize)> = (2..=14).map(|i| (i, stats(&m, i).2)).collect();
    let c = values.iter().filter(|(i, _)| *i <= 6).map(|&(i, rb)| rb as f64 / i as f64).fold(0.0, f64::max);
    for &(i, rb) in &values {
        if rb as f64 > c * i as f64 {
            return Err(format!("i={i}: r_bwt={rb} > {c:.3}·i"));
        }
    }
    let last = values.last().unwrap();
    Ok(format!("C={c:.3} fitted on i<=6, r_bwt(i=14)={}", last.1))
}

fn bwt_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..1000 {
        let k = rng.random_range(2..=4u8);
        let n = rng.random_range(1..=64);
        let s: Vec<u8> = (0..n).map(|_| rng.random_range(0..k)).collect();
        if bwt_symbols(&s) != naive_bwt(&s) {
            return Err(format!("case {case}: mismatch on {s:?}"));
        }
    }
    Ok("1000 random words, zero mismatches".into())
}

fn bispecial_sandwich() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..1000 {
        let n = rng.random_range(1..=200);
        let s: Vec<u8> = (0..n).map(|_| rng.random_range(0..2)).collect();
        let v = check_bispecial_run_bounds(&word(&s, 2), usize::MAX).map_err(|e| e.to_string())?;
        let (lower, upper) = naive_sandwich(&s);
        let observed = naive_r_bwt(&s);
        let agrees = v.predicted["lower"] == lower && v.predicted["upper"] == upper;
        if !v.passed() || !agrees || observed < lower || observed > upper {
            return Err(format!("case {case}: {s:?} lower={lower} upper={upper} r_bwt={observed}"));
        }
    }
    let mut iterates = 0;
    for entry in builtin_corpus() {
        let m = entry.morphism();
        let a = m.prolongable_letter().unwrap();
        let mut i = 0;
        while m.length(a, i) <= BigUint::from(200_000u32) && i <= 40 {
            let w = m.iterate(a, i, 200_000).unwrap();
            let v = check_bispecial_run_bounds(&w, 200_000).map_err(|e| e.to_string())?;
            if !v.passed() {
                return Err(format!("{} i={i}: {}", entry.name, v.witness.unwrap_or_default()));
            }
            iterates += 1;
            i += 1;
        }
    }
    Ok(format!("1000 random words and {iterates} corpus iterates, zero violations"))
}

fn r_set_formulas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut compared = 0;
    let mut size_checked = 0;
    for family in ShapeFamily::ALL {
        for _ in 0..100 {
            let m = random_shape_morphism(&mut rng, family);
            let shape = binary_shape(&m).unwrap();
            let counted = structure_covered(&m).is_ok() && shape.k + shape.ell.unwrap() > 1;
            for i in (1..=20).take_while(|&i| fits(&m, i, 50_000)) {
                let predicted = predict_r_set(&shape, i).map_err(|e| format!("{} i={i}: {e}", m.compact()))?;
                let w = m.iterate(0, i, CAP).unwrap();
                let scanned = r_set(&w, 0).unwrap();
                let naive = naive_r_set(w.symbols(), 0);
                if predicted != naive || scanned != naive {
                    return Err(format!(
                        "{} i={i}: predicted {predicted:?} scanned {scanned:?} naive {naive:?}",
                        m.compact()
                    ));
                }
                compared += 1;
                if counted {
                    let size = naive.len();
                    if size < i || size > (shape.n_a - 1) * i + 1 {
                        return Err(format!(
                            "{} i={i}: |R_i|={size} outside [{i}, {}]",
                            m.compact(),
                            (shape.n_a - 1) * i + 1
                        ));
                    }
                    size_checked += 1;
                }
            }
        }
    }
    Ok(format!("{compared} (morphism, i) pairs exact, {size_checked} size checks"))
}

fn structural_checks() -> Outcome {
    let mut covered = Vec::new();
    let mut checks = 0;
    for entry in builtin_corpus() {
        let m = entry.morphism();
        if structure_covered(&m).is_err() {
            continue;
        }
        covered.push(entry.name);
        for i in (1..).take_while(|&i| fits(&m, i + 1, 3000)) {
            for v in [check_bispecial_lift(&m, i, 3000), check_structural_decomposition(&m, i, 3000)] {
                let v = v.map_err(|e| format!("{} i={i}: {e}", entry.name))?;
                if !v.passed() {
                    return Err(format!("{} i={i} {}: {}", entry.name, v.check, v.witness.unwrap_or_default()));
                }
                checks += 1;
            }
        }
    }
    if covered.is_empty() {
        return Err("no corpus morphism has the required shape".into());
    }
    Ok(format!("{checks} checks over {}", covered.join(", ")))
}

fn run_recurrence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let m = random_morphism(&mut rng, 2);
        for i in 1..=6 {
            let v = check_run_recurrence(&m, i, CAP).map_err(|e| format!("{} i={i}: {e}", m.compact()))?;
            if !v.passed() {
                return Err(format!("{} i={i}: {}", m.compact(), v.witness.unwrap_or_default()));
            }
        }
    }
    Ok("100 morphisms, i=1..6, zero violations".into())
}

fn classification_table() -> Outcome {
    use ComplexityClass::*;
    let expected = [
        ("tm", Linear, true),
        ("fibonacci", Linear, true),
        ("phi", NLogLogN, false),
        ("psi", NLogN, false),
        ("eta", Linear, false),
        ("phi3", Quadratic, false),
        ("phi4", Quadratic, false),
        ("phi5", Quadratic, false),
        ("aab_b", Quadratic, false),
        ("abba_b", UltimatelyPeriodic, false),
        ("abkb", UltimatelyPeriodic, false),
        ("aba_b", UltimatelyPeriodic, false),
    ];
    for (name, class, primitive) in expected {
        let report = classify_and_predict(&corpus(name));
        if report.factor_complexity != Some(class) || report.primitive != primitive {
            return Err(format!("{name}: got {:?}, primitive={}", report.factor_complexity, report.primitive));
        }
        if primitive && report.r_bwt != Some(RbwtClass::AtMostLog) {
            return Err(format!("{name}: r_bwt class {:?}", report.r_bwt));
        }
    }
    Ok(format!("{} corpus morphisms classified as expected", expected.len()))
}

fn lower_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut min_ratio = f64::INFINITY;
    let mut sampled = 0;
    let mut pairs = 0;
    for family in [ShapeFamily::AuabKB, ShapeFamily::AuabKBl] {
        let mut kept = 0;
        while kept < 100 {
            let m = random_shape_morphism(&mut rng, family);
            if structure_covered(&m).is_err() {
                continue;
            }
            kept += 1;
            sampled += 1;
            for i in (1..=20).take_while(|&i| fits(&m, i, 50_000)) {
                let w = m.iterate(0, i, CAP).unwrap();
                let size = r_set(&w, 0).unwrap().len();
                let rb = r_bwt(w.symbols());
                if rb + 1 < size {
                    return Err(format!("{} i={i}: r_bwt={rb} |R_i|={size}", m.compact()));
                }
                min_ratio = min_ratio.min(rb as f64 / size as f64);
                pairs += 1;
            }
        }
    }
    Ok(format!("{sampled} aperiodic morphisms, {pairs} iterates, min r_bwt/|R_i| = {min_ratio:.3}"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("example phi exact", example_phi),
        ("example psi exact", || three_letter_example("psi", 3..=8)),
        ("example eta exact", || three_letter_example("eta", 2..=8)),
        ("chain lengths and r_bwt band", chain_band),
        ("fibonacci r_bwt constant", fibonacci_constant),
        ("thue-morse r_bwt linear", thue_morse_linear),
        ("bwt oracle equivalence", bwt_oracle),
        ("bispecial sandwich", bispecial_sandwich),
        ("r-set formulas", r_set_formulas),
        ("structural checks", structural_checks),
        ("run recurrence", run_recurrence),
        ("classification table", classification_table),
        ("r_bwt lower bound", lower_bound),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({secs:.2}s)", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} ({secs:.2}s)", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
