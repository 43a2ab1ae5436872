//! Error type shared by all fracsq-core modules.

use thiserror::Error;

/// Errors produced by parsing, construction and classification.
///
/// Every variant carries the name of the subsystem that raised it so CLI
/// consumers can print `module: message` diagnostics without extra context.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed pattern document. `line` is 1-based over physical lines.
    #[error("pattern: line {line}: {msg}")]
    Pattern { line: usize, msg: String },

    /// Pattern document rejected before any line can be blamed.
    #[error("pattern: {0}")]
    PatternDocument(String),

    /// Digit-set constructor preconditions violated (empty set, coordinate
    /// out of `[0, N-1]`, duplicate digit, bad base or dimension).
    #[error("digits: {0}")]
    InvalidDigitSet(String),

    /// Operation not defined for this input (e.g. pillars on a 3-D set).
    #[error("{module}: {msg}")]
    Unsupported { module: &'static str, msg: String },

    /// Resource guard: the operation would materialize more cells than the
    /// configured budget allows. Never silently truncated.
    #[error("{module}: cell budget exceeded: need {required} cells, limit is {limit}")]
    Budget {
        module: &'static str,
        required: u128,
        limit: u64,
    },

    /// Coordinate overflow guard (rescale exponent too large for the
    /// integer cell representation).
    #[error("{module}: coordinate overflow: {msg}")]
    Overflow { module: &'static str, msg: String },

    /// Mismatched operands (cell sets at different levels or bases).
    #[error("automaton: {0}")]
    Mismatch(String),

    /// Internal consistency check failed. Indicates a bug, not bad input.
    #[error("internal: {0}")]
    Internal(String),
}

impl Error {
    /// Shorthand for [`Error::Unsupported`] with a module tag.
    pub fn unsupported(module: &'static str, msg: impl Into<String>) -> Self {
        Error::Unsupported {
            module,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
