use std::path::{Path, PathBuf};
use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use morphic_bwt::analysis::{word_stats, WordStats};
use morphic_bwt::harness::{
    builtin_corpus, classify_and_predict, random_morphism, summary_row, verify_morphism, CheckKind, CheckVerdict,
    ResultsCache, Status, VerifyConfig,
};
use morphic_bwt::{Error, Morphism, ParseError, Word};

use crate::output::Sink;
use crate::{ChecksArg, Common, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}: {1}")]
    Parse(String, ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    CapExceeded(Error),
    #[error(transparent)]
    Library(Error),
    #[error("writing output: {0}")]
    Output(std::io::Error),
    #[error("encoding JSON: {0}")]
    Json(serde_json::Error),
    #[error("encoding CSV: {0}")]
    Csv(csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CapExceeded(_) => 3,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => CliError::CapExceeded(e),
            other => CliError::Library(other),
        }
    }
}

/// `A..B` or `A..=B`, both inclusive.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected A..B, found {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|e| format!("range start: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

pub fn parse_checks(s: &str) -> Result<ChecksArg, String> {
    if s.trim() == "all" {
        return Ok(ChecksArg(CheckKind::ALL.to_vec()));
    }
    let mut kinds = Vec::new();
    for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        let kind: CheckKind = name.parse().map_err(|_| {
            let known: Vec<&str> = CheckKind::ALL.iter().map(|k| k.name()).collect();
            format!("unknown check {name:?}; known: {}", known.join(", "))
        })?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return Err("no checks selected".into());
    }
    Ok(ChecksArg(kinds))
}

fn load_spec(path: &Path) -> Result<Morphism, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    Morphism::parse(&text).map_err(|e| CliError::Parse(path.display().to_string(), e))
}

fn start_letter(m: &Morphism, letter: Option<char>) -> Result<u8, CliError> {
    match letter {
        Some(c) => {
            let rank = m.rank(c)?;
            if !m.is_prolongable(rank) {
                return Err(Error::NotProlongable(c).into());
            }
            Ok(rank)
        }
        None => m.prolongable_letter().ok_or(CliError::Library(Error::NoProlongableLetter)),
    }
}

fn json_only(common: &Common, command: &str) -> Result<(), CliError> {
    if common.format == Some(Format::Csv) {
        return Err(CliError::Usage(format!("{command} writes JSON only")));
    }
    Ok(())
}

#[derive(Serialize)]
struct AnalyzeRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    morphism: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    letter: Option<char>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(flatten)]
    stats: WordStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
}

/// The CSV shape of [`AnalyzeRecord`]: nested fields spread into columns.
#[derive(Serialize)]
struct AnalyzeRow<'a> {
    morphism: Option<&'a str>,
    digest: Option<&'a str>,
    letter: Option<char>,
    i: Option<usize>,
    n: usize,
    r: usize,
    r_bwt: usize,
    rho_num: u64,
    rho_den: u64,
    delta_num: u64,
    delta_den: u64,
    kk_bound: f64,
    /// Space-separated.
    r_set: Option<String>,
    strict: Option<usize>,
    weak: Option<usize>,
    ordinary: Option<usize>,
}

impl AnalyzeRecord {
    fn row(&self) -> AnalyzeRow<'_> {
        let s = &self.stats;
        AnalyzeRow {
            morphism: self.morphism.as_deref(),
            digest: self.digest.as_deref(),
            letter: self.letter,
            i: self.i,
            n: s.n,
            r: s.r,
            r_bwt: s.r_bwt,
            rho_num: s.rho_num,
            rho_den: s.rho_den,
            delta_num: s.delta_num,
            delta_den: s.delta_den,
            kk_bound: s.kk_bound,
            r_set: s.r_set.as_ref().map(|q| q.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")),
            strict: s.bispecial_counts.map(|c| c.strict),
            weak: s.bispecial_counts.map(|c| c.weak),
            ordinary: s.bispecial_counts.map(|c| c.ordinary),
        }
    }

    fn write(&self, common: &Common) -> Result<(), CliError> {
        let mut sink = Sink::open(common.out.as_deref())?;
        match common.format.unwrap_or(Format::Json) {
            Format::Json => sink.json(self)?,
            Format::Csv => sink.csv(&[self.row()])?,
        }
        sink.finish()
    }
}

/// The R-set letter: the start letter when the word is binary.
fn r_set_letter(w: &Word, c: u8) -> Option<u8> {
    (w.distinct_letters().len() <= 2 && w.alphabet().len() <= 2).then_some(c)
}

pub fn analyze(
    common: &Common,
    spec: &Path,
    i: usize,
    letter: Option<char>,
    show_word: usize,
) -> Result<ExitCode, CliError> {
    let m = load_spec(spec)?;
    let c = start_letter(&m, letter)?;
    let w = m.iterate(c, i, common.cap_len)?;
    let stats = word_stats(&w, r_set_letter(&w, c), common.cap_bispecial)?;
    let record = AnalyzeRecord {
        morphism: Some(m.compact()),
        digest: Some(m.digest()),
        letter: Some(m.alphabet().letter(c)),
        i: Some(i),
        stats,
        word: (w.len() <= show_word).then(|| w.to_string()),
    };
    record.write(common)?;
    Ok(ExitCode::SUCCESS)
}

pub fn word(common: &Common, text: &str) -> Result<ExitCode, CliError> {
    let w = Word::parse(text)?;
    let stats = word_stats(&w, r_set_letter(&w, 0), common.cap_bispecial)?;
    let record = AnalyzeRecord { morphism: None, digest: None, letter: None, i: None, stats, word: None };
    record.write(common)?;
    Ok(ExitCode::SUCCESS)
}

pub fn iterate(common: &Common, spec: &Path, i: usize, letter: Option<char>) -> Result<ExitCode, CliError> {
    json_only(common, "iterate").map_err(|_| CliError::Usage("iterate writes plain text only".into()))?;
    let m = load_spec(spec)?;
    let c = start_letter(&m, letter)?;
    let w = m.iterate(c, i, common.cap_len)?;
    let mut sink = Sink::open(common.out.as_deref())?;
    sink.line(&w.to_string())?;
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

/// Rows come back in `i` order whatever order the workers finish in. Rows
/// over the cap are still written, flagged in `status`, and turn the exit
/// code to 3.
pub fn sweep(common: &Common, spec: &Path, (lo, hi): (usize, usize), delta: bool) -> Result<ExitCode, CliError> {
    let m = load_spec(spec)?;
    let c = start_letter(&m, None)?;
    let rows = (lo..=hi)
        .into_par_iter()
        .map(|i| summary_row(&m, c, i, common.cap_len, delta))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sink = Sink::open(common.out.as_deref())?;
    match common.format.unwrap_or(Format::Csv) {
        Format::Csv => sink.csv(&rows)?,
        Format::Json => sink.json_lines(&rows)?,
    }
    sink.finish()?;
    if rows.iter().any(|r| !r.is_complete()) {
        eprintln!("morphic-bwt: some iterates exceed --cap-len {}", common.cap_len);
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn classify(common: &Common, spec: &Path) -> Result<ExitCode, CliError> {
    json_only(common, "classify")?;
    let m = load_spec(spec)?;
    if m.size() != 2 {
        eprintln!("warning: {}-letter alphabet, the binary decision table does not apply; report is partial", m.size());
    }
    let report = classify_and_predict(&m);
    let mut sink = Sink::open(common.out.as_deref())?;
    sink.json(&report)?;
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

pub struct VerifyArgs {
    pub specs: Vec<PathBuf>,
    pub builtin_corpus: bool,
    pub random: usize,
    pub seed: u64,
    pub alphabet_size: usize,
    pub checks: Vec<CheckKind>,
    pub i_max: usize,
    pub structural_cap: usize,
}

#[derive(Serialize)]
struct VerdictRow<'a> {
    check: CheckKind,
    morphism: Option<&'a str>,
    digest: Option<&'a str>,
    i: Option<usize>,
    status: Status,
    reason: Option<&'a str>,
    seed: Option<u64>,
    predicted: String,
    observed: String,
    witness: Option<String>,
}

impl<'a> VerdictRow<'a> {
    fn of(v: &'a CheckVerdict) -> Self {
        VerdictRow {
            check: v.check,
            morphism: v.morphism.as_deref(),
            digest: v.digest.as_deref(),
            i: v.i,
            status: v.status,
            reason: v.reason.as_deref(),
            seed: v.seed,
            predicted: v.predicted.to_string(),
            observed: v.observed.to_string(),
            witness: v.witness.as_ref().map(|w| w.to_string()),
        }
    }
}

/// Exit 1 when any non-skipped check fails.
pub fn verify(common: &Common, args: VerifyArgs) -> Result<ExitCode, CliError> {
    let mut jobs: Vec<(Morphism, Option<u64>)> = Vec::new();
    for path in &args.specs {
        jobs.push((load_spec(path)?, None));
    }
    if args.builtin_corpus {
        jobs.extend(builtin_corpus().iter().map(|e| (e.morphism(), None)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for _ in 0..args.random {
        jobs.push((random_morphism(&mut rng, args.alphabet_size), Some(args.seed)));
    }
    if jobs.is_empty() {
        return Err(CliError::Usage("nothing to verify: pass --spec, --builtin-corpus or --random".into()));
    }
    let cache = ResultsCache::from_env().unwrap_or_else(|e| {
        eprintln!("warning: results cache disabled: {e}");
        None
    });
    let base = VerifyConfig {
        i_max: args.i_max,
        cap_len: common.cap_len,
        cap_bispecial: common.cap_bispecial,
        structural_cap: args.structural_cap,
        checks: args.checks,
        seed: None,
    };
    let verdicts: Vec<CheckVerdict> = jobs
        .par_iter()
        .map(|(m, seed)| verify_morphism(m, &VerifyConfig { seed: *seed, ..base.clone() }, cache.as_ref()))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let mut sink = Sink::open(common.out.as_deref())?;
    match common.format.unwrap_or(Format::Json) {
        Format::Json => sink.json_lines(&verdicts)?,
        Format::Csv => sink.csv(&verdicts.iter().map(VerdictRow::of).collect::<Vec<_>>())?,
    }
    sink.finish()?;

    let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
    eprintln!("{} morphisms: {passed} passed, {failed} failed, {skipped} skipped", jobs.len());
    Ok(if failed > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
