use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid segment <{i},{j}>: need odd i <= j")]
    InvalidSegment { i: i32, j: i32 },

    #[error("segment <{i},{j}> is not theta-restricted (need -j <= i <= j)")]
    NotThetaRestricted { i: i32, j: i32 },

    #[error("multiplicity of <{i},{j}> must be positive")]
    ZeroMultiplicity { i: i32, j: i32 },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("index {index} lies outside the window {window}")]
    OutOfWindow { index: i32, window: String },

    #[error("operands live on different windows")]
    WindowMismatch,

    #[error("element is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("crystal ordering compares multisegments of different content")]
    ContentMismatch,

    #[error("negative argument {0} to the quantum factorial")]
    NegativeFactorial(i64),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("triangularity violated: {0}")]
    Triangularity(String),

    #[error("block {block}: quotient has dimension {quotient}, expected {expected}")]
    DimensionMismatch { block: String, quotient: usize, expected: usize },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
