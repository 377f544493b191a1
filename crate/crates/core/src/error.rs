use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Edge `index` of the input (0-based) was `(v, v)`.
    #[error(
        "self-loop ({vertex}, {vertex}) at edge {index}: 4-cycle listing requires a simple graph"
    )]
    SelfLoop { index: usize, vertex: usize },

    #[error("{path}:{line}: self-loop ({vertex}, {vertex})")]
    SelfLoopLine {
        path: PathBuf,
        line: usize,
        vertex: usize,
    },

    #[error("{path}:{line}: malformed edge line {content:?}: {reason}")]
    Malformed {
        path: PathBuf,
        line: usize,
        content: String,
        reason: String,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("common neighbors of a vertex with itself are undefined (u = v = {0})")]
    SameVertex(usize),

    #[error("graph has {n} vertices, above the brute-force oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("unknown algorithm {0:?}")]
    UnknownAlgo(String),

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exact arithmetic identity did not hold; this is a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
