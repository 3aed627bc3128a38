//! Reductions that preserve a weight multiplicity: lowering the highest
//! weight, restriction to a Levi subsystem, and the closed formula for
//! `lam - (alpha_1 + ... + alpha_l)` in type A.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem};
use crate::scalar::Scalar;
use crate::weight::{Multiplicity, RootVector, Weight};

fn under<F: Scalar>(rs: &RootSystem<F>, lam: &Weight, mu: &Weight) -> Result<RootVector> {
    rs.is_under(mu, lam)?.ok_or_else(|| Error::NotUnder {
        lam: lam.clone(),
        mu: mu.clone(),
    })
}

/// Indices `j` with `c_j <= a_j`: the largest set allowed by the lowering rule.
pub(crate) fn lowerable(lam: &Weight, c: &RootVector) -> Vec<usize> {
    (0..lam.rank()).filter(|&j| c[j] <= lam[j]).collect()
}

/// Replaces `a_j` by `c_j` on `indices`, keeping `lam - mu` fixed.
pub(crate) fn lower_on(
    lam: &Weight,
    mu: &Weight,
    c: &RootVector,
    indices: &[usize],
) -> (Weight, Weight) {
    let mut lowered = lam.clone();
    for &j in indices {
        lowered.coords_mut()[j] = c[j];
    }
    let shift = &lowered - lam;
    (lowered, mu + &shift)
}

/// `(lam', mu')` with `lam' = lam + sum_{j in J} (c_j - a_j) lam_j` and
/// `mu' = lam' - (lam - mu)`, where `J = {j : c_j <= a_j}`.
///
/// `m_{L(lam)}(mu) = m_{L(lam')}(mu')`. When `J` is empty the pair is returned
/// unchanged.
pub fn lower_highest_weight<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    mu: &Weight,
) -> Result<(Weight, Weight)> {
    let c = under(rs, lam, mu)?;
    Ok(lower_on(lam, mu, &c, &lowerable(lam, &c)))
}

/// Result of restricting a multiplicity problem to the Levi subsystem on the
/// support of `lam - mu`.
#[derive(Debug, Clone)]
pub struct LeviRestriction<F> {
    pub system: RootSystem<F>,
    pub lam: Weight,
    pub mu: Weight,
    /// `indices[k]` is the ambient index of the subsystem's `k`-th simple root.
    pub indices: Vec<usize>,
}

/// Restriction to the minimal Levi subsystem containing `lam - mu`.
pub fn levi_restrict<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    mu: &Weight,
) -> Result<LeviRestriction<F>> {
    let c = under(rs, lam, mu)?;
    let indices = c.support();
    let system = if indices.len() == rs.rank() {
        rs.clone()
    } else {
        rs.levi(&indices)
    };
    Ok(LeviRestriction {
        lam: lam.restrict(&indices),
        mu: mu.restrict(&indices),
        system,
        indices,
    })
}

/// Simple roots of a type A system listed along the Dynkin path, starting
/// from the end with the smaller index.
pub(crate) fn path_order<F: Scalar>(rs: &RootSystem<F>) -> Vec<usize> {
    let l = rs.rank();
    let a = rs.cartan();
    let neighbours = |i: usize| (0..l).filter(move |&j| j != i && a[i][j] != 0);
    let start = (0..l).find(|&i| neighbours(i).count() <= 1).unwrap_or(0);
    let mut order = vec![start];
    while order.len() < l {
        let last = *order.last().unwrap();
        let prev = order.len().checked_sub(2).map(|k| order[k]);
        match neighbours(last).find(|&j| Some(j) != prev) {
            Some(j) => order.push(j),
            None => break,
        }
    }
    order
}

pub(crate) fn is_simple_type_a<F: Scalar>(rs: &RootSystem<F>) -> bool {
    rs.is_simple() && rs.components()[0].family == Family::A
}

/// Positions (1-based, along the Dynkin path) of the non-zero coefficients of `lam`.
pub(crate) fn type_a_support<F: Scalar>(rs: &RootSystem<F>, lam: &Weight) -> Vec<usize> {
    path_order(rs)
        .iter()
        .enumerate()
        .filter(|(_, &i)| lam[i] != 0)
        .map(|(pos, _)| pos + 1)
        .collect()
}

/// Multiplicity of `lam - (alpha_1 + ... + alpha_l)` in `L(lam)` for type
/// `A_l`: 1 when `lam` has a single non-zero coefficient, otherwise
/// `prod_{i >= 2} (r_i - r_{i-1} + 1)` over the positions `r_1 < r_2 < ...`
/// of the non-zero coefficients.
pub fn type_a_closed<F: Scalar>(rs: &RootSystem<F>, lam: &Weight) -> Result<Multiplicity> {
    if !is_simple_type_a(rs) {
        return Err(Error::WrongType(rs.name()));
    }
    crate::error::check_len(rs.rank(), lam.rank())?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.clone()));
    }
    if lam.is_zero() {
        return Err(Error::ZeroHighestWeight);
    }
    let positions = type_a_support(rs, lam);
    let product = positions.windows(2).fold(BigUint::one(), |acc, w| {
        acc * BigUint::from((w[1] - w[0] + 1) as u64)
    });
    Ok(Multiplicity(product))
}
