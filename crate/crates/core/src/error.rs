use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("invalid graded dimension: p + q must be at least 1")]
    EmptyDim,
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite entry in input")]
    NonFinite,
    #[error("{0} is not self-adjoint")]
    NotSelfAdjoint(&'static str),
    #[error("scalar is not unimodular: |omega| = {0}")]
    NotUnimodular(f64),
    #[error("empty domain basis")]
    EmptyDomain,
    #[error("domain basis is linearly dependent")]
    DependentBasis,
    #[error("element does not lie in the domain subspace (residual {0:e})")]
    NotInDomain(f64),
    #[error("domain subspace is not closed under the superinvolution")]
    NotStarClosed,
    #[error("tensor element has no factors")]
    EmptyFactors,
    #[error("missing grading metadata for {0}")]
    MissingGrading(&'static str),
    #[error("dimension cap exceeded: {0}")]
    DimensionCap(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown {what}: {value}")]
    Unknown { what: &'static str, value: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
