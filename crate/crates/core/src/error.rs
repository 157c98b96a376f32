use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid variable: {0}")]
    InvalidVariable(String),

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid flag shape: {0}")]
    InvalidShape(String),

    #[error("permutation {perm} is not a minimal coset representative for shape {shape}")]
    NotInShape { perm: String, shape: String },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("monomial {0} lies outside the staircase span")]
    NotInSpan(String),

    #[error("basis expansion left a nonzero residual: {0}")]
    NonzeroResidual(String),

    #[error("polynomial is not symmetric in the blocks of shape {0}")]
    NotBlockSymmetric(String),

    #[error("retained coefficient of {perm} involves variables outside the window: {poly}")]
    StrayVariables { perm: String, poly: String },

    #[error("singular or non-unimodular system: {0}")]
    Singular(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
