//! Error type shared by all pipeline stages.

use std::path::PathBuf;

/// Errors produced by series loading, metric estimation, marking,
/// descriptor construction, search, modeling, and generation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("row {row}: {msg}")]
    Parse { row: usize, msg: String },

    #[error("series too short: need at least {needed} samples, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("zero variance: series is constant")]
    ZeroVariance,

    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },

    #[error("too few points: need at least {needed}, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("duplicated data: all neighbor distances are zero")]
    DuplicatedData,

    #[error("too few transitions: need at least {needed}, got {got}")]
    TooFewTransitions { needed: usize, got: usize },

    #[error("rank-deficient regressors (condition estimate {cond:.3e})")]
    RankDeficient { cond: f64 },

    #[error("state diverged at step {step}: norm {norm:.3e} exceeds guard {guard:.1e}")]
    Diverged { step: usize, norm: f64, guard: f64 },

    #[error("orbit escaped to non-finite values at iterate {step}")]
    OrbitEscaped { step: usize },

    #[error("non-chaotic: horizon unbounded (lambda = {lambda})")]
    NonChaotic { lambda: f64 },

    #[error("mismatched {what}: {why}")]
    Mismatch { what: &'static str, why: String },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, why: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            why: why.into(),
        }
    }

    pub(crate) fn mismatch(what: &'static str, why: impl Into<String>) -> Self {
        Error::Mismatch {
            what,
            why: why.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
