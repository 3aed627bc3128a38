//! Weight multiplicities of irreducible highest-weight modules.
//!
//! Three recursions are available:
//!
//! * classical Freudenthal, summing over all positive roots and dividing by
//!   `dlm(lam, mu) = 2(lam + rho, lam - mu) - |lam - mu|^2`;
//! * the level recursion, valid when some `j` has `0 < c_j <= a_j` for
//!   `lam - mu = sum c_r alpha_r`:
//!   `m(mu) = (1/c_j) sum_{r=1}^{c_j} sum_{alpha : level_j(alpha) > 0} level_j(alpha) m(mu + r alpha)`,
//!   which needs no inner products and only the roots involving `alpha_j`;
//! * the closed product formula for `lam - (alpha_1 + ... + alpha_l)` in type A.
//!
//! The dispatcher ([`MultContext::compute`]) conjugates to a dominant
//! weight, restricts to the Levi subsystem on the support of `lam - mu`,
//! lowers the highest weight and then picks the cheapest applicable formula.
//! Every recursive sub-query goes through the dispatcher again.

mod engine;
mod reductions;
mod trace;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;

pub use engine::{Algorithm, Counters, MultContext};
pub use reductions::{levi_restrict, lower_highest_weight, type_a_closed, LeviRestriction};
pub use trace::{ReductionTrace, TraceKind, TraceStep};

use crate::error::{check_len, Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weight::{Multiplicity, Weight};

/// `2(lam + rho, lam - mu) - |lam - mu|^2`.
pub fn dlm<F: Scalar>(rs: &RootSystem<F>, lam: &Weight, mu: &Weight) -> Result<F> {
    check_len(rs.rank(), lam.rank())?;
    check_len(rs.rank(), mu.rank())?;
    let diff = lam - mu;
    let shifted = lam + rs.rho();
    let two = F::from_i64(2);
    Ok(two * rs.inner_unchecked(&shifted, &diff) - rs.inner_unchecked(&diff, &diff))
}

/// Multiplicity of `mu` in `L(lam)` through the dispatcher, with its trace.
pub fn multiplicity<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    mu: &Weight,
) -> Result<(Multiplicity, ReductionTrace)> {
    let mut ctx = MultContext::new(rs, lam.clone())?.with_trace(true);
    let m = ctx.compute(mu)?;
    Ok((m, ctx.take_trace()))
}

/// [`multiplicity`] without the trace.
pub fn multiplicity_quiet<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    mu: &Weight,
) -> Result<Multiplicity> {
    MultContext::new(rs, lam.clone())?.compute(mu)
}

/// Dominant weights of `L(lam)` with their multiplicities.
pub fn character<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
) -> Result<BTreeMap<Weight, Multiplicity>> {
    MultContext::new(rs, lam.clone())?.character()
}

/// `sum_mu m(mu) |W mu|` over the dominant character.
pub fn dimension<F: Scalar>(rs: &RootSystem<F>, lam: &Weight) -> Result<BigUint> {
    let chi = character(rs, lam)?;
    chi.iter().try_fold(BigUint::from(0u32), |acc, (mu, m)| {
        Ok(acc + m.value() * rs.orbit_size(mu)?)
    })
}

/// Dominant weights under `lam`, from `lam` downwards by subtracting positive
/// roots and re-conjugating.
pub(crate) fn dominant_weights_under<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
) -> Result<Vec<Weight>> {
    check_len(rs.rank(), lam.rank())?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.clone()));
    }
    let mut seen = BTreeSet::from([lam.clone()]);
    let mut queue = VecDeque::from([lam.clone()]);
    let mut order = Vec::new();
    while let Some(nu) = queue.pop_front() {
        for k in 0..rs.positive_roots().len() {
            let cand = rs.dominant_representative(&(&nu - rs.root_weight(k)));
            if rs.is_under_unchecked(&cand, lam).is_some() && seen.insert(cand.clone()) {
                queue.push_back(cand);
            }
        }
        order.push(nu);
    }
    Ok(order)
}
