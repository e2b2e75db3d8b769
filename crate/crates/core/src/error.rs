use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected: vertices {0} and {1} are not reachable from each other")]
    Disconnected(usize, usize),

    #[error("input is not a tree")]
    NotATree,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("work limit of {limit} subset checks exceeded at cardinality {cardinality}")]
    WorkLimit { limit: u64, cardinality: usize },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
