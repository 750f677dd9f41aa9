use std::io;

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("seed set is empty")]
    EmptySeedSet,

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("every vertex of the query set is already numbered at this stamp")]
    AllNumbered,

    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(VertexId, VertexId),

    #[error("vertex {v} is not reachable from {u} through the component")]
    Unreachable { u: VertexId, v: VertexId },

    #[error("oracle budget exceeded: {n} vertices > limit {limit}")]
    OverBudget { n: usize, limit: usize },

    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
