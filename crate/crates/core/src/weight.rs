//! Lattice vectors: integral weights, root-lattice vectors and multiplicities.

use std::fmt;
use std::ops::{Add, Index, Sub};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Integral weight, in coordinates relative to the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `i`-th fundamental weight (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Coordinates at the given indices, in order.
    pub fn restrict(&self, indices: &[usize]) -> Weight {
        Weight(indices.iter().map(|&i| self.0[i]).collect())
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.0)
    }
}

/// Non-negative integer combination of simple roots.
///
/// `coeffs()[j]` is the `j`-level of the vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::NegativeInput);
        }
        Ok(RootVector(coeffs))
    }

    pub(crate) fn new_unchecked(coeffs: Vec<i64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c >= 0));
        RootVector(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = RootVector::zero(rank);
        v.0[i] = 1;
        v
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self, j: usize) -> i64 {
        self.0[j]
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Indices with a non-zero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// `true` when `self - other` is still non-negative.
    pub fn dominates(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn restrict(&self, indices: &[usize]) -> RootVector {
        RootVector(indices.iter().map(|&i| self.0[i]).collect())
    }
}

impl Index<usize> for RootVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.0)
    }
}

fn write_bracketed(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

/// Dimension of a weight space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multiplicity(pub BigUint);

impl Multiplicity {
    pub fn zero() -> Self {
        Multiplicity(BigUint::zero())
    }

    pub fn one() -> Self {
        Multiplicity(BigUint::from(1u32))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for Multiplicity {
    fn from(v: u64) -> Self {
        Multiplicity(BigUint::from(v))
    }
}

impl From<BigUint> for Multiplicity {
    fn from(v: BigUint) -> Self {
        Multiplicity(v)
    }
}

impl PartialEq<u64> for Multiplicity {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
