use thiserror::Error;

/// Coarse classification used by callers that map failures to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-contract input.
    Input,
    /// Input exceeds the capacity of an exact solver.
    Capacity,
    /// The requested structure does not exist for this input.
    Infeasible,
    /// An internal invariant was violated; always a bug.
    Defect,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("weight matrix is not square: row {row} has {got} entries, expected {expected}")]
    NonSquareMatrix {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("instance needs at least 3 vertices, got {n}")]
    TooFewVertices { n: usize },
    #[error("weights[{i}][{j}] = {forward} differs from weights[{j}][{i}] = {backward}")]
    AsymmetricWeight {
        i: usize,
        j: usize,
        forward: f64,
        backward: f64,
    },
    #[error("weight of ({i},{j}) is {weight}; off-diagonal weights must be positive and finite")]
    NonpositiveWeight { i: usize, j: usize, weight: f64 },
    #[error("diagonal entry ({i},{i}) is {weight}, expected 0")]
    NonzeroDiagonal { i: usize, weight: f64 },
    #[error("self-loop on vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph is disconnected: no path from {from} to {to}")]
    Disconnected { from: usize, to: usize },
    #[error(
        "weights violate the triangle inequality in {count} triple(s); \
         worst is ({i},{j},{k}) with deficit {deficit}"
    )]
    NotMetric {
        count: usize,
        i: usize,
        j: usize,
        k: usize,
        deficit: f64,
    },
    #[error("sequence does not visit vertex {v}")]
    MissingVertex { v: usize },
    #[error("walk is not closed: starts at {first}, ends at {last}")]
    OpenWalk { first: usize, last: usize },
    #[error("sequence is too short to be a closed walk")]
    EmptyWalk,
    #[error("walk uses edge ({u},{v}) which is absent from the graph")]
    EdgeAbsent { u: usize, v: usize },
    #[error("not a permutation: vertex {v} appears {count} times")]
    NotPermutation { v: usize, count: usize },
    #[error("instance size {n} exceeds the exact-solver capacity of {limit}")]
    Capacity { n: usize, limit: usize },
    #[error("no Eulerian circuit: {reason}")]
    NoEulerianCircuit { reason: String },
    #[error("unknown instance family {0:?}")]
    UnknownFamily(String),
    #[error("bad experiment configuration: {0}")]
    BadConfig(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid instance JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("internal invariant violated: {0}")]
    Defect(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Capacity { .. } => ErrorKind::Capacity,
            NoEulerianCircuit { .. } => ErrorKind::Infeasible,
            Defect(_) => ErrorKind::Defect,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }
}
