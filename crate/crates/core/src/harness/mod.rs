//! Executable checks: closed-form predictions against measured words.
//!
//! Every check produces a [`CheckVerdict`], one JSON line each. Failures
//! carry a witness (a factor, an index or the offending numbers) so they can
//! be replayed.

mod asymptotics;
mod cache;
mod checks;
mod classify;
mod corpus;
mod recurrence;
mod sample;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::morphism::Morphism;

pub use asymptotics::{check_asymptotics, summary_row, AsymptoticsReport, SummaryRow};
pub use cache::ResultsCache;
pub use checks::{
    check_bispecial_lift, check_bispecial_run_bounds, check_r_set, check_structural_decomposition, predict_r_set,
    structure_covered,
};
pub use classify::{classify_and_predict, ClassificationReport, ComplexityClass, Compressibility, RbwtClass};
pub use corpus::{builtin_corpus, CorpusEntry};
pub use recurrence::{check_run_recurrence, parikh_by_recurrence, parikh_by_unrolled_sums, ParikhPair};
pub use sample::{random_morphism, random_shape_morphism, ShapeFamily};
pub use verify::{verify_morphism, VerifyConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    BispecialBounds,
    RSet,
    BispecialLift,
    StructuralDecomposition,
    RunRecurrence,
    Asymptotics,
    Classification,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::BispecialBounds,
        CheckKind::RSet,
        CheckKind::BispecialLift,
        CheckKind::StructuralDecomposition,
        CheckKind::RunRecurrence,
        CheckKind::Asymptotics,
        CheckKind::Classification,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::BispecialBounds => "bispecial_bounds",
            CheckKind::RSet => "r_set",
            CheckKind::BispecialLift => "bispecial_lift",
            CheckKind::StructuralDecomposition => "structural_decomposition",
            CheckKind::RunRecurrence => "run_recurrence",
            CheckKind::Asymptotics => "asymptotics",
            CheckKind::Classification => "classification",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub check: CheckKind,
    pub morphism: Option<String>,
    pub digest: Option<String>,
    pub i: Option<usize>,
    pub predicted: Value,
    pub observed: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl CheckVerdict {
    pub fn new(check: CheckKind, m: Option<&Morphism>, i: Option<usize>) -> Self {
        CheckVerdict {
            check,
            morphism: m.map(Morphism::compact),
            digest: m.map(Morphism::digest),
            i,
            predicted: Value::Null,
            observed: Value::Null,
            status: Status::Skip,
            reason: None,
            witness: None,
            seed: None,
        }
    }

    /// Pass when `holds`, fail with `witness` otherwise.
    pub fn judge(mut self, predicted: Value, observed: Value, holds: bool, witness: Value) -> Self {
        self.predicted = predicted;
        self.observed = observed;
        self.status = if holds { Status::Pass } else { Status::Fail };
        if !holds {
            self.witness = Some(witness);
        }
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skip;
        self.reason = Some(reason.into());
        self
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
