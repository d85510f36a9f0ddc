//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value violates its invariant. `key` names the
    /// offending field so the CLI can report it.
    #[error("invalid config: {key}: {reason}")]
    InvalidConfig { key: String, reason: String },

    /// An argument violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numeric argument is NaN or infinite.
    #[error("non-finite numeric input: {0}")]
    NumericInput(String),

    /// Guidance or coherence was requested with h == l (no overlap region).
    #[error("empty overlap: h == l leaves no overlapping timesteps")]
    EmptyOverlap,

    /// An operation was called in a state that does not support it.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Caller broke a runtime contract (e.g. stepping a finished episode).
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// The demo generator exhausted its retry budget.
    #[error("demo generation failed after {attempts} attempts (preset likely infeasible)")]
    Generation { attempts: usize },

    /// A serialized file is malformed. `offset` is the byte position at
    /// which decoding failed.
    #[error("parse error at byte {offset}: {what}")]
    Parse { offset: u64, what: String },

    /// File format version does not match the reader.
    #[error("version mismatch: file has {found}, reader supports {expected}")]
    Version { found: u32, expected: u32 },

    /// The ODE iterate became non-finite at the named step.
    #[error("sampler diverged at step {step}")]
    Divergence { step: usize },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid_config(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            key: key.into(),
            reason: reason.into(),
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
