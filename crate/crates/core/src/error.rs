use thiserror::Error;

use crate::tree::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("path endpoints coincide at vertex {0}")]
    SameVertex(usize),

    #[error("matching does not cover every vertex")]
    NotPerfect,

    #[error("no perfect matching")]
    NotInvertible,

    #[error("matrix is singular")]
    Singular,

    #[error("vertex count {0} is odd")]
    OddOrder(usize),

    #[error("{requested} vertices exceeds the configured bound of {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("edge {0} is not an edge of the spanning tree")]
    NotSpanningTreeEdge(Edge),

    #[error("edge {0} is already present")]
    EdgeAlreadyPresent(Edge),

    #[error("invalid exchange move: {0}")]
    InvalidMove(#[from] crate::exchange::MoveViolation),

    #[error("exchange relation contains a cycle")]
    CyclicRelation,
}
