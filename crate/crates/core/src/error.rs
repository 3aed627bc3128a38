use num_bigint::BigUint;
use thiserror::Error;

use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no simple root system of type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("root-lattice vector has a negative coordinate")]
    NegativeInput,

    #[error("{mu} is not under {lam}")]
    NotUnder { lam: Weight, mu: Weight },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("inexact division: {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("closed formula requires a simple system of type A, got {0}")]
    WrongType(String),

    #[error("closed formula requires a non-zero highest weight")]
    ZeroHighestWeight,

    #[error("Weyl group has order {order}, above the cap {cap}")]
    GroupTooLarge { order: BigUint, cap: u64 },

    #[error("value {0} does not fit the scalar type")]
    ScalarOverflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
