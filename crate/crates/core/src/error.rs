use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(BigInt),

    #[error("empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: BigInt, hi: BigInt },

    #[error("constraint {index}: lower bound {lower} exceeds upper bound {upper}")]
    InvertedBounds {
        index: usize,
        lower: BigInt,
        upper: BigInt,
    },

    #[error("solution domain must lie in the nonnegative integers, got lower bound {0}")]
    NegativeDomain(BigInt),

    #[error("capacities are not harmonic: {upper} (constraint {upper_index}) is not a multiple of {lower} (constraint {lower_index})")]
    NotHarmonic {
        lower_index: usize,
        lower: BigInt,
        upper_index: usize,
        upper: BigInt,
    },

    #[error("bound {value} outside [0, {max}]")]
    InvalidBound { value: BigInt, max: BigInt },

    #[error("length mismatch: {left} capacities vs {right} bounds")]
    LengthMismatch { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate instance: {0}")]
    Degenerate(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("enumeration needs {needed} candidates, limit is {limit}")]
    ResourceLimit { needed: BigInt, limit: BigInt },
}
