//! Crate-wide error type, split into parse failures and precondition failures
//! so the CLI can map them onto distinct exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) is a loop")]
    LoopEdge { u: usize, v: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not identifiable: vertices {u} and {v} are twins")]
    NotIdentifiable { u: usize, v: usize },

    #[error("graph has a triangle on vertices {u}, {v}, {w}")]
    Triangle { u: usize, v: usize, w: usize },

    #[error("maximum degree is {delta}, but the construction needs at least 3; use the exact solver for paths and cycles")]
    MaxDegreeTooSmall { delta: usize },

    #[error("graph is the 4-cycle, for which the false-twin construction is undefined")]
    FourCycle,

    #[error("graph has false twins ({u} and {v} share a neighbourhood), which this variant forbids")]
    FalseTwinsPresent { u: usize, v: usize },

    #[error("candidate code contains vertex {v}, which lies outside the permitted set")]
    CodeOutsideSet { v: usize },

    #[error("set is not independent: it contains the edge ({u}, {v})")]
    NotIndependent { u: usize, v: usize },

    #[error("set contains vertex {v}, which has a false twin")]
    NotTwinFree { v: usize },

    #[error("vertex {v} in the degree-two part of the matching has degree {deg}")]
    DegreeTwoViolated { v: usize, deg: usize },

    #[error("graph has {n} vertices, above the exact-search limit of {limit}")]
    TooLargeForExact { n: usize, limit: usize },

    #[error("greedy colouring used {needed} colours, more than the requested {k}")]
    ColouringFailed { k: usize, needed: usize },

    #[error("invalid family parameters: {0}")]
    Family(String),
}

impl Error {
    /// True for errors produced while reading input, as opposed to
    /// precondition violations on a well-formed graph.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::LoopEdge { .. }
                | Error::VertexOutOfRange { .. }
                | Error::Parse { .. }
                | Error::Io(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
