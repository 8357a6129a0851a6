use thiserror::Error;

/// Errors produced by graph construction, enumeration and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid edge ({u}, {v}) for a graph of order {order}")]
    InvalidEdge { u: usize, v: usize, order: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph of order {order} exceeds the limit of {limit} vertices")]
    TooLarge { order: usize, limit: usize },

    #[error("not an i-set: {0}")]
    InvalidISet(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("construction failed verification: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
