//! Statistics of concrete finite words.

mod bispecial;
mod bwt;
mod complexity;
mod index;
mod rset;
mod runs;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Word;

pub use bispecial::{bispecials_of, circular_bispecials, classify, BispecialClass, BispecialCounts, BispecialRecord};
pub use bwt::{bwt, bwt_symbols, primitive_root_len, r_bwt, rotation_lcp, sort_rotations, BwtResult};
pub use complexity::{
    circular_complexity, delta, factor_complexity, factor_counts, kk_bound, kk_bound_from, suffix_array, suffix_lcp,
};
pub use index::CircularIndex;
pub use rset::{r_set, run_boundary_bispecials, BoundaryFactor, RSet};
pub use runs::{r, rho, rle, run_count, Run, RunLength};

/// Default length cap for bispecial enumeration.
pub const DEFAULT_BISPECIAL_CAP: usize = 200_000;

/// One analysis record per word.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WordStats {
    pub n: usize,
    pub r: usize,
    pub r_bwt: usize,
    pub rho_num: u64,
    pub rho_den: u64,
    pub delta_num: u64,
    pub delta_den: u64,
    pub kk_bound: f64,
    /// Only for binary words containing the chosen letter.
    pub r_set: Option<Vec<usize>>,
    /// `None` when the word is longer than the bispecial cap.
    pub bispecial_counts: Option<BispecialCounts>,
    pub includes_empty_factor: bool,
}

/// `a` selects the letter whose R-set is reported.
pub fn word_stats(w: &Word, a: Option<u8>, bispecial_cap: usize) -> Result<WordStats> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let r = run_count(w.symbols());
    let r_bwt = r_bwt(w.symbols());
    let rho = num_rational::Ratio::new(r_bwt as u64, r as u64);
    let delta = delta(w)?;
    let r_set = a.and_then(|a| r_set(w, a).ok()).map(|s| s.into_iter().collect());
    let bispecial_counts = (w.len() <= bispecial_cap).then(|| BispecialCounts::of(&bispecials_of(w.symbols())));
    Ok(WordStats {
        n: w.len(),
        r,
        r_bwt,
        rho_num: *rho.numer(),
        rho_den: *rho.denom(),
        delta_num: *delta.numer(),
        delta_den: *delta.denom(),
        kk_bound: kk_bound_from(delta, w.len()),
        r_set,
        bispecial_counts,
        includes_empty_factor: true,
    })
}
