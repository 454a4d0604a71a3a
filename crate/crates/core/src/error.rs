use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge #{index} ({u}, {v}) has an endpoint outside [0, {n})")]
    EdgeOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },

    #[error("vertex {vertex} has negative weight {weight}")]
    NegativeWeight { vertex: usize, weight: i64 },

    #[error("vertex {vertex} has weight {weight}, which does not fit in 32 bits")]
    WeightTooLarge { vertex: usize, weight: i64 },

    #[error("expected {expected} vertex weights, found {found}")]
    WeightCountMismatch { expected: usize, found: usize },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{}: {message}", path.display())]
    Input { path: PathBuf, message: String },

    #[error("brute force refused: {vertices} live vertices exceeds the limit of {limit}")]
    OracleTooLarge { vertices: usize, limit: usize },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
