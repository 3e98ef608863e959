use thiserror::Error;

/// Errors produced by instance handling, oracles and reductions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("malformed structure: {0}")]
    Structure(String),

    /// The source instance is a NO instance for a reason the reduction can
    /// detect syntactically (an empty set, an uncoverable element, ...).
    #[error("trivially a NO instance: {0}")]
    TriviallyNo(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }
}
