use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{family} needs size >= {min}, got {size}")]
    BelowFamilyMinimum {
        family: &'static str,
        size: usize,
        min: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have order >= {min}, got {order}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph of order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("basis enumeration truncated at {cap} sets")]
    Truncated { cap: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("expected {expected} rooted graphs, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("composition: {0}")]
    Composition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
