use thiserror::Error;

use crate::simplex::VertexId;

/// Errors raised by constructions and queries across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-disjoint join: vertex {0} appears on both sides")]
    NonDisjointJoin(VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("vertex {0} is a ghost (lies in no face)")]
    GhostVertex(VertexId),

    #[error("complex has ghost vertices; remove ghosts first")]
    GhostVertices,

    #[error("mismatched vertex sets")]
    MismatchedVertexSets,

    #[error("simplex {{{0}}} is not supported on the vertex set")]
    FaceOutsideVertexSet(String),

    #[error("duplicate vertex {0} in simplex")]
    DuplicateVertex(VertexId),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("guardrail exceeded: {0}")]
    Guardrail(String),

    #[error("isomorphism bound exceeded: {got} vertices, limit {limit}")]
    IsomorphismBound { got: usize, limit: usize },

    #[error("malformed spec: {0}")]
    MalformedSpec(String),

    #[error("sequential/direct divergence at stage {stage}")]
    SequentialDivergence { stage: usize },

    #[error("composite characteristic {0}")]
    CompositeCharacteristic(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
