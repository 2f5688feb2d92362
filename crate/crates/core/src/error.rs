use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a graph failed tree certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotATree {
    Empty,
    Disconnected { components: usize },
    EdgeCount { order: usize, edges: usize },
}

impl std::fmt::Display for NotATree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotATree::Empty => write!(f, "graph has no vertices"),
            NotATree::Disconnected { components } => {
                write!(f, "graph has {components} connected components")
            }
            NotATree::EdgeCount { order, edges } => {
                write!(f, "{edges} edges on {order} vertices (a tree has {})", order.saturating_sub(1))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("not a tree: {0}")]
    NotATree(NotATree),

    #[error("graph on {order} vertices is too large for brute force (guard {guard})")]
    TooLarge { order: usize, guard: usize },

    #[error("graph is not prime (sigma and minimality are defined on prime graphs only)")]
    NotPrime,

    #[error("vertex {0} is not a leaf")]
    NotALeaf(Vertex),

    #[error("{what} needs at least {min} vertices, got {order}")]
    TooFewVertices { what: &'static str, min: usize, order: usize },

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidInput(String),
}
