use thiserror::Error;

use crate::cylindric::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {lhs} vs {rhs}")]
    OrderMismatch { lhs: usize, rhs: usize },

    #[error("series is not a unit: constant coefficient is zero")]
    NotAUnit,

    #[error("invalid pochhammer spec: {0}")]
    InvalidPochSpec(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid cylindric partition: {0}")]
    InvalidPartition(#[from] Violation),

    #[error("invalid slice {white:?} for profile {profile:?}")]
    InvalidSlice { profile: Vec<u32>, white: Vec<u32> },

    #[error("profile mismatch: {lhs:?} vs {rhs:?}")]
    ProfileMismatch { lhs: Vec<u32>, rhs: Vec<u32> },

    #[error("slice at level {level} is not contained in the slice below it")]
    ContainmentViolation { level: usize },

    #[error("formula instantiation produced factor exponent {exponent} ({context})")]
    FormulaInstantiation { exponent: i64, context: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
}
