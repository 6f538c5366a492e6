use thiserror::Error;

use crate::ring::RingDescriptor;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{element} is not an element of {ring}")]
    NotInRing { element: String, ring: RingDescriptor },
    #[error("unsupported ring for {operation}: {ring}")]
    Unsupported {
        operation: &'static str,
        ring: RingDescriptor,
    },
    #[error("the zero ideal is not a fractional ideal")]
    ZeroIdeal,
    #[error("{0} is not a prime ideal")]
    NotPrime(String),
    #[error("{element} is not a section of {bundle}")]
    NotInBundle { element: String, bundle: String },
    #[error("sections generate {generated}, not the bundle {bundle}")]
    NotGenerating { generated: String, bundle: String },
    #[error("determinant {det} does not generate {power}")]
    DeterminantNotGenerating { det: String, power: String },
    #[error("points {first} and {second} are not strongly distinct")]
    NotStronglyDistinct { first: usize, second: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("annihilator characterization needs a rank-1 bundle, got rank {0}")]
    RankTooLarge(usize),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
