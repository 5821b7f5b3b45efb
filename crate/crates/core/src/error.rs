use thiserror::Error;

/// Errors produced by the graph algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph with {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    #[error("edge set is not a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("edge set is not a two-component edge cut: {0}")]
    NotATwoComponentCut(String),
    #[error("graph is not simple")]
    NotSimple,
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = GenusError> = std::result::Result<T, E>;
