use thiserror::Error;

/// Errors raised by library operations when a caller breaks a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("{0}-{1} is not an edge")]
    MissingEdge(usize, usize),

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("color {color} exceeds universe size {universe}")]
    ColorOutOfRange { color: usize, universe: usize },

    #[error("list of vertex {0} is empty")]
    EmptyList(usize),

    #[error("list assignment covers {lists} vertices, graph has {n}")]
    CoverageMismatch { lists: usize, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
