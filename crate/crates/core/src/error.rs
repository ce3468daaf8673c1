use thiserror::Error;

/// Errors raised by the graph procedures in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("unsupported size: order {order} exceeds limit {limit}")]
    UnsupportedSize { order: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid edit: {0}")]
    InvalidEdit(String),

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("embedding inconsistency: {0}")]
    Embedding(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("linkage hypothesis violated: removing {separator:?} leaves terminal-free component {component:?}")]
    HypothesisViolated {
        separator: Vec<usize>,
        component: Vec<usize>,
    },

    #[error("counterexample: {0}")]
    Counterexample(String),

    #[error("assembly error: {0}")]
    Assembly(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            offset: e.column(),
            reason: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
