//! Crate-wide error type.
//!
//! The experiment runner maps these variants onto the process exit codes of
//! the `dirac-lab` binary: configuration problems (unknown experiment, invalid
//! parameters, malformed fields) exit with 2, I/O problems with 3, and a
//! clean run whose verdicts fail with 1.

use thiserror::Error;

/// All errors produced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Grid construction rejected its arguments (odd `n`, `n < 4`, `L ≤ 0`).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// An operation rejected a parameter (exponent `p < 1`, scale out of
    /// range, empty family, non-monotone list, …). The message echoes the
    /// violated precondition.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Two fields that must share a grid do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// A sample or symbol value was NaN or infinite.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// A serialized field stream was malformed (bad magic, unsupported
    /// version, truncated payload, invalid component count).
    #[error("format error: {0}")]
    Format(String),

    /// The requested experiment name is not registered.
    #[error("unknown experiment: {0} (run with --list to see the registry)")]
    UnknownExperiment(String),

    /// Underlying I/O failure while reading or writing a file.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the `dirac-lab` binary for this error:
    /// `3` for I/O failures, `2` for everything else (bad configuration,
    /// parameters, or input data).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            _ => 2,
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
