use num_rational::Ratio;
use serde::Serialize;

use super::bwt::bwt_symbols;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Run {
    pub letter: u8,
    pub len: usize,
}

/// Maximal equal-letter runs, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunLength {
    pub runs: Vec<Run>,
}

impl RunLength {
    pub fn count(&self) -> usize {
        self.runs.len()
    }
}

/// Number of maximal runs; 0 for the empty slice.
pub fn run_count(s: &[u8]) -> usize {
    if s.is_empty() {
        return 0;
    }
    1 + s.windows(2).filter(|p| p[0] != p[1]).count()
}

pub fn rle(w: &Word) -> Result<RunLength> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut runs: Vec<Run> = Vec::new();
    for &c in w.symbols() {
        match runs.last_mut() {
            Some(run) if run.letter == c => run.len += 1,
            _ => runs.push(Run { letter: c, len: 1 }),
        }
    }
    Ok(RunLength { runs })
}

/// `r(w)`.
pub fn r(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(run_count(w.symbols()))
}

/// `r(bwt(w)) / r(w)`, exact.
pub fn rho(w: &Word) -> Result<Ratio<u64>> {
    let runs = r(w)?;
    let bwt_runs = run_count(&bwt_symbols(w.symbols()));
    Ok(Ratio::new(bwt_runs as u64, runs as u64))
}
