//! Exact weight multiplicities for irreducible finite-dimensional modules of
//! complex semisimple Lie algebras.
//!
//! ```
//! use weightmult::{multiplicity, Family, RootSystemQ, Weight};
//!
//! let a2 = RootSystemQ::build(Family::A, 2).unwrap();
//! let (m, _trace) = multiplicity(&a2, &Weight::from([1, 1]), &Weight::from([0, 0])).unwrap();
//! assert_eq!(m, 2);
//! ```
//!
//! The rational parts of the computation (the invariant form, Freudenthal
//! sums) are generic over [`Scalar`]; [`RootSystem`] and [`MultContext`]
//! default to arbitrary-precision rationals.

pub mod error;
pub mod multiplicity;
pub mod oracle;
pub mod partition;
pub mod rootsys;
pub mod scalar;
pub mod weight;

pub use error::{Error, Result};
pub use multiplicity::{
    character, dimension, dlm, levi_restrict, lower_highest_weight, multiplicity,
    multiplicity_quiet, type_a_closed, Algorithm, Counters, LeviRestriction, MultContext,
    ReductionTrace, TraceKind, TraceStep,
};
pub use oracle::{
    enumerate_weyl, kostant_multiplicity, verify_module, KostantOracle, VerifyReport, WeylElement,
    DEFAULT_CAP,
};
pub use partition::{kostant_partition, verma_multiplicity, PartitionMemo};
pub use rootsys::{Component, Family, RootSystem};
pub use scalar::Scalar;
pub use weight::{Multiplicity, RootVector, Weight};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Exact rationals of unbounded size.
pub type Rational = BigRational;
/// 64-bit rationals; fast, but overflow on large modules.
pub type Rational64 = num_rational::Rational64;
/// 128-bit rationals.
pub type Rational128 = num_rational::Ratio<i128>;

pub type RootSystemQ = RootSystem<Rational>;
pub type RootSystem64 = RootSystem<Rational64>;
pub type RootSystem128 = RootSystem<Rational128>;

pub type MultContextQ = MultContext<Rational>;
pub type MultContext64 = MultContext<Rational64>;
