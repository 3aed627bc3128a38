//! Kostant's partition function and weight multiplicities of Verma modules.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{check_len, Result};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weight::{RootVector, Weight};

/// Memo for `P(gamma; k)`: decompositions of `gamma` using only the first `k`
/// positive roots. Tied to the root system it was first used with.
#[derive(Debug, Default, Clone)]
pub struct PartitionMemo {
    table: HashMap<(RootVector, usize), BigUint>,
}

impl PartitionMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Number of ways to write `gamma` as a non-negative integer combination of
/// positive roots.
pub fn kostant_partition<F: Scalar>(
    rs: &RootSystem<F>,
    gamma: &RootVector,
    memo: &mut PartitionMemo,
) -> Result<BigUint> {
    check_len(rs.rank(), gamma.rank())?;
    Ok(count(
        rs.positive_roots(),
        rs.rank(),
        gamma,
        rs.positive_roots().len(),
        memo,
    ))
}

fn count(
    roots: &[RootVector],
    rank: usize,
    gamma: &RootVector,
    k: usize,
    memo: &mut PartitionMemo,
) -> BigUint {
    // only simple roots left: the decomposition is forced
    if k <= rank {
        let forced = gamma.coeffs()[k..].iter().all(|&c| c == 0);
        return if forced {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if gamma.is_zero() {
        return BigUint::one();
    }
    let key = (gamma.clone(), k);
    if let Some(v) = memo.table.get(&key) {
        return v.clone();
    }
    let root = &roots[k - 1];
    let mut total = BigUint::zero();
    let mut rest = gamma.coeffs().to_vec();
    loop {
        total += count(
            roots,
            rank,
            &RootVector::new_unchecked(rest.clone()),
            k - 1,
            memo,
        );
        let mut ok = true;
        for (r, c) in rest.iter_mut().zip(root.coeffs()) {
            *r -= c;
            ok &= *r >= 0;
        }
        if !ok {
            break;
        }
    }
    memo.table.insert(key, total.clone());
    total
}

/// `dim Delta(lam)_mu = P(lam - mu)`, zero when `mu` is not under `lam`.
pub fn verma_multiplicity<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    mu: &Weight,
    memo: &mut PartitionMemo,
) -> Result<BigUint> {
    match rs.is_under(mu, lam)? {
        Some(c) => kostant_partition(rs, &c, memo),
        None => Ok(BigUint::zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;
    use crate::Error;
    use num_rational::BigRational;

    fn rs(f: Family, l: usize) -> RootSystem<BigRational> {
        RootSystem::build(f, l).unwrap()
    }

    fn p(rs: &RootSystem<BigRational>, c: &[i64]) -> BigUint {
        kostant_partition(
            rs,
            &RootVector::new(c.to_vec()).unwrap(),
            &mut PartitionMemo::new(),
        )
        .unwrap()
    }

    #[test]
    fn small_values() {
        let a2 = rs(Family::A, 2);
        assert_eq!(p(&a2, &[0, 0]), BigUint::from(1u32));
        assert_eq!(p(&a2, &[1, 1]), BigUint::from(2u32));
        assert_eq!(p(&a2, &[2, 2]), BigUint::from(3u32));
        for root in a2.positive_roots() {
            assert!(p(&a2, root.coeffs()) >= BigUint::from(1u32));
        }
    }

    #[test]
    fn verma_values() {
        let a2 = rs(Family::A, 2);
        let mut memo = PartitionMemo::new();
        let lam = Weight::from([1, 1]);
        assert_eq!(
            verma_multiplicity(&a2, &lam, &lam, &mut memo).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            verma_multiplicity(&a2, &lam, &Weight::zero(2), &mut memo).unwrap(),
            BigUint::from(2u32)
        );
        let lam = Weight::from([1, 0]);
        assert_eq!(
            verma_multiplicity(&a2, &lam, &Weight::zero(2), &mut memo).unwrap(),
            BigUint::zero()
        );
        assert_eq!(
            verma_multiplicity(&a2, &lam, &Weight::zero(3), &mut memo).unwrap_err(),
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn verma_depends_only_on_the_difference() {
        let b3 = rs(Family::B, 3);
        let mut memo = PartitionMemo::new();
        let lam = Weight::from([2, 1, 1]);
        let mu = Weight::from([0, 1, -1]);
        let delta = Weight::from([-3, 5, 2]);
        assert_eq!(
            verma_multiplicity(&b3, &lam, &mu, &mut memo).unwrap(),
            verma_multiplicity(&b3, &(&lam + &delta), &(&mu + &delta), &mut memo).unwrap()
        );
    }
}
