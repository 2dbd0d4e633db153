use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not signed (coefficients have mixed signs or it is zero)")]
    UnsignedElement,
    #[error("input must have integer coefficients")]
    NonIntegralInput,
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("entries do not lie in the subring required for kappa = {0}")]
    WrongSubring(u32),
    #[error("parabolic matrices (double eigenvalue) are not supported")]
    ParabolicNotSupported,
    #[error("matrix is scalar under the chosen embedding")]
    ScalarMatrix,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("matrix is not hyperbolic-like")]
    NotHyperbolicLike,
    #[error("search exceeded the cap N = {0}")]
    Overflow(u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("depth {requested} exceeds the configured cap {cap}")]
    DepthTooLarge { requested: usize, cap: usize },
    #[error("embedding index must be 0..=3, got {0}")]
    BadEmbedding(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
