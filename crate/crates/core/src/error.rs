use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands live over different base groups")]
    BaseMismatch,
    #[error("invalid element literal `{0}`")]
    BadLiteral(String),
    #[error("unknown generator t{0}")]
    UnknownGenerator(u32),
    #[error("exponent sum is {0}, expected 1")]
    ExponentSum(i64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("edge {edge} is used {count} times, expected exactly 2")]
    EdgeUse { edge: u32, count: usize },
    #[error("edge {0} is traversed twice in the same direction")]
    EdgeDirection(u32),
    #[error("face {0} has an empty boundary")]
    EmptyFace(usize),
    #[error("map is not connected")]
    Disconnected,
    #[error("declared surface `{declared}` has Euler characteristic {expected}, map has {actual}")]
    SurfaceMismatch {
        declared: String,
        expected: i64,
        actual: i64,
    },
    #[error("map is not of the requested type: {0}")]
    MapType(String),
    #[error("invalid schedule: {0}")]
    Schedule(String),
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("diagram: {0}")]
    Diagram(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
