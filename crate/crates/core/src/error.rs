use thiserror::Error;

/// Errors produced by graph construction, parsing and the exact algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    BadVertex { vertex: usize, n: usize },
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("malformed graph6: {0}")]
    BadGraph6(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown graph `{0}`")]
    NotFound(String),
    #[error("enumeration budget of {limit} sets exceeded")]
    BudgetExceeded { limit: usize },
    #[error("sequence is not sorted nondecreasingly or contains NaN")]
    UnsortedSequence,
}

pub type Result<T> = std::result::Result<T, Error>;
