use thiserror::Error;

use crate::cycles::OddGirth;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// The input had to be bipartite. `witness` is an odd closed walk.
    #[error("graph is not bipartite (odd closed walk of length {})", witness.len())]
    NotBipartite { witness: Vec<usize> },

    #[error("odd girth {measured} is below the required {required}")]
    OddGirthTooSmall { measured: OddGirth, required: usize },

    #[error("graph is not triangle-free: triangle {0:?}")]
    TriangleFound([usize; 3]),

    #[error("radius {radius} exceeds (g-1)/2 = {max}")]
    RadiusTooLarge { radius: usize, max: usize },

    #[error("cycle of length {len} is too short, need at least {required}")]
    CycleTooShort { len: usize, required: usize },

    #[error("not a shortest odd cycle: {0}")]
    NotShortestOddCycle(String),

    #[error("sample size {r} exceeds vertex count {n}")]
    SampleTooLarge { r: usize, n: usize },

    #[error("{oracle} oracle limit exceeded: {n} vertices > {limit}")]
    OracleLimit {
        oracle: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("generation failed: {0}")]
    Generation(String),
}

impl Error {
    /// True for violated preconditions of an algorithm, as opposed to
    /// malformed arguments.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotBipartite { .. }
                | Error::OddGirthTooSmall { .. }
                | Error::TriangleFound(_)
                | Error::RadiusTooLarge { .. }
                | Error::CycleTooShort { .. }
                | Error::NotShortestOddCycle(_)
                | Error::SampleTooLarge { .. }
                | Error::OracleLimit { .. }
                | Error::Generation(_)
        )
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
