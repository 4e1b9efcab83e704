use thiserror::Error;

/// Errors produced by network parsing, repair and weight computation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The network contains a cycle; `vertex` (0-based) lies on one.
    #[error(
        "network is not acyclic (vertex {} lies on a cycle); repair it with shrink or preprint first",
        vertex + 1
    )]
    Cyclic { vertex: usize },

    #[error("{what} overflowed the 64-bit float range; rerun in log or exact numeric mode")]
    Overflow { what: &'static str },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
