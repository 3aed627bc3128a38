//! Exact scalar fields used for the invariant bilinear form.
//!
//! Everything integral (Cartan matrices, weights, root coordinates,
//! multiplicities) is kept in integer types. The rational-valued quantities
//! (the symmetrized form, `dlm`, the Freudenthal sums) are generic over
//! [`Scalar`], which is implemented for arbitrary-precision rationals and for
//! the fixed-width `Ratio<i64>` / `Ratio<i128>`. The fixed-width variants are
//! faster but overflow on large modules; use [`BigRational`] unless the
//! instance is known to be small.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact ordered field.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `None` when the value does not fit the representation.
    fn from_bigint(v: &BigInt) -> Option<Self>;

    /// The value as an integer, or `None` when it is not integral.
    fn exact_integer(&self) -> Option<BigInt>;

    fn to_big_rational(&self) -> BigRational;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(v.clone()))
    }

    fn exact_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }
}

macro_rules! impl_fixed_ratio {
    ($int:ty, $to:ident) => {
        impl Scalar for Ratio<$int> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(v as $int)
            }

            fn from_bigint(v: &BigInt) -> Option<Self> {
                v.$to().map(Ratio::from_integer)
            }

            fn exact_integer(&self) -> Option<BigInt> {
                self.is_integer().then(|| BigInt::from(*self.numer()))
            }

            fn to_big_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    };
}

impl_fixed_ratio!(i64, to_i64);
impl_fixed_ratio!(i128, to_i128);

/// Dot product of an integer vector with a scalar vector.
pub(crate) fn dot_int<F: Scalar>(ints: &[i64], scalars: &[F]) -> F {
    ints.iter()
        .zip(scalars)
        .filter(|(n, _)| **n != 0)
        .fold(F::zero(), |acc, (n, s)| acc + s.clone() * F::from_i64(*n))
}

/// Exact inverse of a square integer matrix, `None` when singular.
pub(crate) fn invert(matrix: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<BigRational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&v| BigRational::from_i64(v)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = v.clone() - factor.clone() * pv.clone();
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn integer_detection() {
        assert_eq!(
            BigRational::from_ratio(6, 3).exact_integer(),
            Some(BigInt::from(2))
        );
        assert_eq!(BigRational::from_ratio(1, 3).exact_integer(), None);
        assert_eq!(
            Rational64::from_ratio(-8, 4).exact_integer(),
            Some(BigInt::from(-2))
        );
    }

    #[test]
    fn fixed_width_rejects_oversized_integers() {
        let big = BigInt::from(i64::MAX) * 4;
        assert!(Rational64::from_bigint(&big).is_none());
        assert!(Ratio::<i128>::from_bigint(&big).is_some());
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let inv = invert(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(inv[0][0], BigRational::from_ratio(2, 3));
        assert_eq!(inv[0][1], BigRational::from_ratio(1, 3));
        assert!(invert(&[vec![1, 2], vec![2, 4]]).is_none());
    }
}
