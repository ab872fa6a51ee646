use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Family parameters outside the region where the weight is integrable.
    #[error("invalid family: {0}")]
    InvalidFamilySpec(String),

    /// A lower hypergeometric parameter hits a zero of its shifted factorial.
    #[error("zero denominator: lower parameter {parameter} vanishes at term {term}")]
    ZeroDenominator { parameter: Rational, term: usize },

    #[error("argument outside domain: {0}")]
    Domain(String),

    /// Gram-Schmidt produced a non-positive norm; the moment functional is not positive definite.
    #[error("moment matrix is not positive definite (norm of degree {degree} is {norm})")]
    NotPositiveDefinite { degree: usize, norm: Rational },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("malformed rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
