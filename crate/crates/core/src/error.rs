use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("graph on {0} vertices exceeds the supported width of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("edge ({0},{1}) is not present")]
    MissingEdge(usize, usize),
    #[error("edge ({0},{1}) is already present")]
    DuplicateEdge(usize, usize),
    #[error("a graph on zero vertices is not allowed here")]
    EmptyGraph,
    #[error("arithmetic overflow in an exact count")]
    Overflow,
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("minimum degree is {found}, expected {expected}")]
    MinDegreeMismatch { expected: usize, found: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not critical for minimum degree {0}")]
    NotCritical(usize),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("invalid rewiring pattern: {0}")]
    InvalidPattern(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("report serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
