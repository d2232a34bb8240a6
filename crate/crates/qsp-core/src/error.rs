use alloc::string::String;
use alloc::vec::Vec;

/// Errors produced by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("cannot evaluate a Laurent polynomial at q = 0")]
    ZeroEvaluation,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("weight {weight:?} is not valid for shape {shape:?}")]
    InvalidWeight { weight: Vec<i32>, shape: Vec<u32> },
    #[error("path lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("paths {lower} and {upper} are not comparable")]
    Incomparable { lower: String, upper: String },
    #[error("generator index {index} outside 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },
    #[error("path {0} is not the image of a weight for this shape")]
    NotEtaImage(String),
    #[error("singular linear system: {0}")]
    Singular(String),
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
    #[error("cannot parse {0}")]
    Parse(String),
}

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
