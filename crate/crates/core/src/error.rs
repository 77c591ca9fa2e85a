use thiserror::Error;

/// Errors raised by the combinatorial and linear-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension vector: {0}")]
    InvalidDimensionVector(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("pair ({i},{j}) out of range for t = {t}")]
    PairOutOfRange { i: usize, j: usize, t: usize },
    #[error("window ({i},{j}) out of range for t = {t}")]
    WindowOutOfRange { i: usize, j: usize, t: usize },
    #[error("block ({i},{j}) out of range for t = {t}")]
    BlockOutOfRange { i: usize, j: usize, t: usize },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("matrix of size {found} does not match n = {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not in the nilradical of the parabolic for d")]
    NotInNilradical,
    #[error("power k must be at least 1")]
    ZeroPower,
    #[error("pair ({i},{j}) is not in Gamma(d)")]
    NotInGamma { i: usize, j: usize },
    #[error("pair ({i},{j}) is not in Lambda(d)")]
    NotInLambda { i: usize, j: usize },
    #[error("invalid line diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("no separating witness for ({i},{j}) within {budget} trials")]
    WitnessBudgetExhausted { i: usize, j: usize, budget: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("malformed matrix document: {0}")]
    MalformedMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
