use thiserror::Error;

use crate::genseed::Violation;
use crate::lpalgebra::LpViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("not divisible")]
    NotDivisible,

    #[error("input polynomial is constant")]
    ConstantInput,

    #[error("negative power of a non-monomial in substitution")]
    NonMonomialInverse,

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid seed: {}", join_violations(.0))]
    InvalidSeed(Vec<Violation>),

    #[error("invalid LP seed: {}", join_violations(.0))]
    InvalidLpSeed(Vec<LpViolation>),

    #[error("direction {direction} out of range 1..={rank}")]
    DirectionOutOfRange { direction: usize, rank: usize },

    #[error("integer overflow in exchange matrix mutation")]
    Overflow,

    /// A named precondition of an operation is not met (`acyclic`, `coprime`, ...).
    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("ill-defined substitution: {0}")]
    IllDefinedSubstitution(String),

    #[error("invalid document: {0}")]
    Document(String),

    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error payloads.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ArityMismatch(..) => "arity-mismatch",
            Error::DivisionByZero => "division-by-zero",
            Error::NotDivisible => "not-divisible",
            Error::ConstantInput => "constant-input",
            Error::NonMonomialInverse => "non-monomial-inverse",
            Error::Parse { .. } => "parse",
            Error::InvalidSeed(_) | Error::InvalidLpSeed(_) => "invalid-seed",
            Error::DirectionOutOfRange { .. } => "invalid-direction",
            Error::Overflow => "overflow",
            Error::Precondition(_) => "precondition",
            Error::IllDefinedSubstitution(_) => "ill-defined-substitution",
            Error::Document(_) => "invalid-document",
            Error::Internal(_) => "internal",
        }
    }
}

fn join_violations<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
