//! Independent cross-checks: Kostant's multiplicity formula over an explicitly
//! enumerated Weyl group, and dimension checks against the Weyl formula.
//! Deliberately naive; nothing in the dispatcher depends on this module.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::multiplicity::{dominant_weights_under, Algorithm, MultContext};
use crate::partition::{kostant_partition, PartitionMemo};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weight::{Multiplicity, Weight};

pub const DEFAULT_CAP: u64 = 1_000_000;

/// An element of the Weyl group acting on fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// `w(rho)`; determines `w` since `rho` has trivial stabilizer.
    pub image_of_rho: Weight,
    /// `(-1)^length`.
    pub parity: i8,
    /// Integer matrix of `w` in weight coordinates.
    pub action: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(
            self.action
                .iter()
                .map(|row| row.iter().zip(w.coords()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

fn check_cap<F: Scalar>(rs: &RootSystem<F>, cap: u64) -> Result<()> {
    let order = rs.weyl_order();
    if order > BigUint::from(cap) {
        return Err(Error::GroupTooLarge { order, cap });
    }
    Ok(())
}

/// All elements of `W`, by breadth-first closure under the simple reflections.
pub fn enumerate_weyl<F: Scalar>(rs: &RootSystem<F>, cap: u64) -> Result<Vec<WeylElement>> {
    check_cap(rs, cap)?;
    let l = rs.rank();
    let a = rs.cartan();
    // s_i: w -> w - w_i * (column i of A)
    let gens: Vec<Vec<Vec<i64>>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    (0..l)
                        .map(|k| i64::from(j == k) - if k == i { a[j][i] } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    let identity: Vec<Vec<i64>> = (0..l)
        .map(|j| (0..l).map(|k| i64::from(j == k)).collect())
        .collect();
    let first = WeylElement {
        image_of_rho: rs.rho().clone(),
        parity: 1,
        action: identity,
    };
    let mut index: HashMap<Weight, usize> = HashMap::from([(first.image_of_rho.clone(), 0)]);
    let mut elements = vec![first];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for g in &gens {
            let action = matmul(g, &elements[idx].action);
            let image = Weight::new(action.iter().map(|row| row.iter().sum()).collect());
            if index.contains_key(&image) {
                continue;
            }
            let parity = -elements[idx].parity;
            assert_eq!(
                determinant(&action).signum() as i8,
                parity,
                "parity disagrees with determinant"
            );
            index.insert(image.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(WeylElement {
                image_of_rho: image,
                parity,
                action,
            });
        }
    }
    debug_assert_eq!(BigUint::from(elements.len()), rs.weyl_order());
    Ok(elements)
}

fn matmul(x: &[Vec<i64>], y: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Bareiss fraction-free elimination.
fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// Kostant's formula `sum_w (-1)^{l(w)} P(w(lam + rho) - (mu + rho))`, with the
/// group enumerated once and the partition memo shared across queries.
pub struct KostantOracle<'a, F: Scalar> {
    rs: &'a RootSystem<F>,
    group: Vec<WeylElement>,
    memo: PartitionMemo,
}

impl<'a, F: Scalar> KostantOracle<'a, F> {
    pub fn new(rs: &'a RootSystem<F>, cap: u64) -> Result<Self> {
        Ok(KostantOracle {
            rs,
            group: enumerate_weyl(rs, cap)?,
            memo: PartitionMemo::new(),
        })
    }

    pub fn multiplicity(&mut self, lam: &Weight, mu: &Weight) -> Result<Multiplicity> {
        check_len(self.rs.rank(), lam.rank())?;
        check_len(self.rs.rank(), mu.rank())?;
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam.clone()));
        }
        let rho = self.rs.rho();
        let lam_rho = lam + rho;
        let mu_rho = mu + rho;
        let mut total = BigInt::zero();
        for w in &self.group {
            let top = w.apply(&lam_rho);
            if let Some(gamma) = self.rs.is_under_unchecked(&mu_rho, &top) {
                let p = BigInt::from(kostant_partition(self.rs, &gamma, &mut self.memo)?);
                if w.parity > 0 {
                    total += p;
                } else {
                    total -= p;
                }
            }
        }
        assert!(
            !total.is_negative(),
            "alternating sum produced a negative multiplicity"
        );
        Ok(Multiplicity(total.to_biguint().unwrap()))
    }
}

pub fn kostant_multiplicity<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    mu: &Weight,
    cap: u64,
) -> Result<Multiplicity> {
    KostantOracle::new(rs, cap)?.multiplicity(lam, mu)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCheck {
    pub mu: Weight,
    pub dispatcher: Multiplicity,
    pub classical: Multiplicity,
    /// Absent when the Weyl group exceeded the cap.
    pub kostant: Option<Multiplicity>,
}

impl WeightCheck {
    pub fn agrees(&self) -> bool {
        self.dispatcher == self.classical
            && self.kostant.as_ref().is_none_or(|k| *k == self.dispatcher)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub system: String,
    pub lam: Weight,
    pub checks: Vec<WeightCheck>,
    pub dim_character: BigUint,
    pub dim_weyl: BigUint,
    /// Order of the Weyl group when it was too large for the oracle.
    pub oracle_skipped: Option<BigUint>,
}

impl VerifyReport {
    pub fn first_divergence(&self) -> Option<&WeightCheck> {
        self.checks.iter().find(|c| !c.agrees())
    }

    pub fn passed(&self) -> bool {
        self.first_divergence().is_none() && self.dim_character == self.dim_weyl
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.system)?;
        writeln!(f, "highest weight: {}", self.lam)?;
        writeln!(f, "dominant weights checked: {}", self.checks.len())?;
        if let Some(order) = &self.oracle_skipped {
            writeln!(f, "kostant oracle: skipped (|W| = {order})")?;
        }
        if let Some(bad) = self.first_divergence() {
            let k = bad
                .kostant
                .as_ref()
                .map_or("-".to_string(), |k| k.to_string());
            writeln!(
                f,
                "first divergence: mu = {} dispatcher = {} classical = {} kostant = {}",
                bad.mu, bad.dispatcher, bad.classical, k
            )?;
        }
        writeln!(
            f,
            "dimension: {} (character-sum) / {} (weyl)",
            self.dim_character, self.dim_weyl
        )?;
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// Compares dispatcher, classical Freudenthal and Kostant's formula on every
/// dominant weight of `L(lam)`, and the character-sum dimension against the
/// Weyl dimension formula. Falls back to the Freudenthal comparisons when the
/// Weyl group is larger than `cap`.
pub fn verify_module<F: Scalar>(
    rs: &RootSystem<F>,
    lam: &Weight,
    cap: u64,
) -> Result<VerifyReport> {
    let weights = dominant_weights_under(rs, lam)?;
    let mut auto = MultContext::new(rs, lam.clone())?;
    let mut classical = MultContext::new(rs, lam.clone())?.with_algorithm(Algorithm::Classical);
    let (mut oracle, oracle_skipped) = match KostantOracle::new(rs, cap) {
        Ok(o) => (Some(o), None),
        Err(Error::GroupTooLarge { order, .. }) => (None, Some(order)),
        Err(e) => return Err(e),
    };
    let mut checks = Vec::with_capacity(weights.len());
    let mut dim_character = BigUint::zero();
    for mu in weights {
        let dispatcher = auto.compute(&mu)?;
        let classical = classical.compute(&mu)?;
        let kostant = oracle
            .as_mut()
            .map(|o| o.multiplicity(lam, &mu))
            .transpose()?;
        dim_character += dispatcher.value() * rs.orbit_size(&mu)?;
        checks.push(WeightCheck {
            mu,
            dispatcher,
            classical,
            kostant,
        });
    }
    Ok(VerifyReport {
        system: rs.name(),
        lam: lam.clone(),
        checks,
        dim_character,
        dim_weyl: rs.weyl_dimension(lam)?,
        oracle_skipped,
    })
}
