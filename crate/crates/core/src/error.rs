use thiserror::Error;

use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set over {found} vertices used with a graph of order {expected}")]
    SetMismatch { expected: usize, found: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex {vertex} is isolated: k-monopolies are undefined")]
    IsolatedVertex { vertex: usize },
    #[error("k = {k} outside the valid interval {lo}..={hi}")]
    KOutOfRange { k: i64, lo: i64, hi: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("no closed form for {family} at k = {k}")]
    UnsupportedFormula { family: String, k: i64 },
    #[error("graph of order {n} exceeds the exact-search limit of {limit} vertices")]
    TooLarge { n: usize, limit: usize },
    #[error("level {0} is not a positive even integer")]
    BadLevel(i64),
    #[error("{what} fails at vertex {vertex}")]
    Violation { what: String, vertex: usize },
    #[error("{0}")]
    Parse(#[from] ParseError),
}
