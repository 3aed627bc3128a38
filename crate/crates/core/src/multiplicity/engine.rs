use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dominant_weights_under;
use super::reductions::{is_simple_type_a, lower_on, lowerable, type_a_closed, type_a_support};
use super::trace::{ReductionTrace, TraceKind};
use crate::error::{check_len, Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weight::{Multiplicity, RootVector, Weight};

/// Which recursion a context uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// Full dispatcher, closed formula included.
    #[default]
    Auto,
    /// Classical Freudenthal only, no reductions.
    Classical,
    /// Dispatcher without the type A closed formula, so the level recursion
    /// does the work wherever it applies.
    Fast,
}

/// Work tallies. All counts are cumulative over the context's lifetime.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    /// Summand terms `(r, alpha)` evaluated by classical Freudenthal.
    pub classical_terms: u64,
    /// Summand terms `(r, alpha)` evaluated by the level recursion.
    pub fast_terms: u64,
    pub inner_products: u64,
    pub cache_hits: u64,
    /// Summand terms of the outermost formula application only.
    pub top_level_terms: u64,
}

#[derive(Clone)]
struct Sub<F> {
    /// Ambient indices of the subsystem's simple roots.
    key: Arc<[usize]>,
    rs: Arc<RootSystem<F>>,
}

type MemoKey = (Arc<[usize]>, Weight, Weight);

/// Computation context for one highest weight `lam`.
///
/// Holds the memo tables (dominant representatives only) and the counters.
/// A context is single-owner; independent contexts over the same root
/// system can run in parallel.
pub struct MultContext<F: Scalar = num_rational::BigRational> {
    top: Sub<F>,
    lam: Weight,
    algorithm: Algorithm,
    subsystems: HashMap<Vec<usize>, Sub<F>>,
    memo: HashMap<MemoKey, BigUint>,
    classical_memo: HashMap<Weight, BigUint>,
    counters: Counters,
    trace: Option<ReductionTrace>,
    depth: usize,
}

impl<F: Scalar> MultContext<F> {
    pub fn new(rs: &RootSystem<F>, lam: Weight) -> Result<Self> {
        check_len(rs.rank(), lam.rank())?;
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam));
        }
        let key: Arc<[usize]> = (0..rs.rank()).collect();
        let top = Sub {
            key,
            rs: Arc::new(rs.clone()),
        };
        Ok(MultContext {
            top,
            lam,
            algorithm: Algorithm::Auto,
            subsystems: HashMap::new(),
            memo: HashMap::new(),
            classical_memo: HashMap::new(),
            counters: Counters::default(),
            trace: None,
            depth: 0,
        })
    }

    pub fn with_algorithm(mut self, algorithm: Algorithm) -> Self {
        self.algorithm = algorithm;
        self
    }

    pub fn with_trace(mut self, on: bool) -> Self {
        self.trace = on.then(ReductionTrace::default);
        self
    }

    pub fn root_system(&self) -> &RootSystem<F> {
        &self.top.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lam
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    pub fn reset_counters(&mut self) {
        self.counters = Counters::default();
    }

    /// Returns the trace recorded so far and starts a fresh one.
    pub fn take_trace(&mut self) -> ReductionTrace {
        match &mut self.trace {
            Some(t) => std::mem::take(t),
            None => ReductionTrace::default(),
        }
    }

    fn note(&mut self, kind: TraceKind) {
        if let Some(t) = &mut self.trace {
            t.push(self.depth, kind);
        }
    }

    fn check(&self, mu: &Weight) -> Result<()> {
        check_len(self.top.rs.rank(), mu.rank())
    }

    /// Multiplicity of `mu` in `L(lam)` with the context's algorithm.
    pub fn compute(&mut self, mu: &Weight) -> Result<Multiplicity> {
        self.check(mu)?;
        self.depth = 0;
        let m = match self.algorithm {
            Algorithm::Classical => {
                self.note(TraceKind::ClassicalFreudenthal);
                self.classical(mu)?
            }
            Algorithm::Auto | Algorithm::Fast => {
                let top = self.top.clone();
                let lam = self.lam.clone();
                self.dispatch(&top, &lam, mu, None)?
            }
        };
        Ok(Multiplicity(m))
    }

    /// Classical Freudenthal recursion on the dominant conjugate of `mu`,
    /// recursing on itself with no reductions.
    pub fn freudenthal_classical(&mut self, mu: &Weight) -> Result<Multiplicity> {
        self.check(mu)?;
        self.depth = 0;
        Ok(Multiplicity(self.classical(mu)?))
    }

    /// The level recursion for `mu` at the context's highest weight, with
    /// `c = lam - mu` and `0 < c_j <= a_j`. Sub-queries go through the
    /// dispatcher.
    pub fn fast_freudenthal(
        &mut self,
        mu: &Weight,
        c: &RootVector,
        j: usize,
    ) -> Result<Multiplicity> {
        self.check(mu)?;
        let rs = self.top.rs.clone();
        let actual = rs.is_under_unchecked(mu, &self.lam);
        if actual.as_ref() != Some(c) {
            return Err(Error::PreconditionViolated(format!(
                "{c} is not lam - mu in root coordinates"
            )));
        }
        if j >= rs.rank() || c[j] == 0 || c[j] > self.lam[j] {
            return Err(Error::PreconditionViolated(format!(
                "level recursion needs 0 < c_j <= a_j at j = {j}"
            )));
        }
        self.depth = 0;
        self.note(TraceKind::FastFreudenthal { j });
        let top = self.top.clone();
        let lam = self.lam.clone();
        Ok(Multiplicity(self.fast_step(&top, &lam, mu, c, j)?))
    }

    /// Dominant weights of `L(lam)` and their multiplicities.
    pub fn character(&mut self) -> Result<BTreeMap<Weight, Multiplicity>> {
        let rs = self.top.rs.clone();
        let mut out = BTreeMap::new();
        if self.lam.is_zero() {
            out.insert(self.lam.clone(), Multiplicity::one());
            return Ok(out);
        }
        for mu in dominant_weights_under(&rs, &self.lam)? {
            let m = self.compute(&mu)?;
            if !m.is_zero() {
                out.insert(mu, m);
            }
        }
        Ok(out)
    }

    fn subsystem(&mut self, parent: &Sub<F>, local: &[usize]) -> Sub<F> {
        let key: Vec<usize> = local.iter().map(|&i| parent.key[i]).collect();
        if let Some(s) = self.subsystems.get(&key) {
            return s.clone();
        }
        let sub = Sub {
            key: key.clone().into(),
            rs: Arc::new(self.top.rs.levi(&key)),
        };
        self.subsystems.insert(key, sub.clone());
        sub
    }

    fn tally_term(&mut self, fast: bool) {
        if fast {
            self.counters.fast_terms += 1;
        } else {
            self.counters.classical_terms += 1;
        }
        if self.depth == 0 {
            self.counters.top_level_terms += 1;
        }
    }

    fn sub_query(
        &mut self,
        sub: &Sub<F>,
        lam: &Weight,
        mu: &Weight,
        bound: i64,
    ) -> Result<BigUint> {
        self.depth += 1;
        let out = self.dispatch(sub, lam, mu, Some(bound));
        self.depth -= 1;
        out
    }

    /// Conjugate, test dominance, restrict to the Levi subsystem on the
    /// support of `lam - mu+` and solve each simple factor.
    fn dispatch(
        &mut self,
        sub: &Sub<F>,
        lam: &Weight,
        mu: &Weight,
        bound: Option<i64>,
    ) -> Result<BigUint> {
        let rs = sub.rs.clone();
        let (dom, word) = rs.dominant_conjugate(mu);
        if self.trace.is_some() {
            let word = word.iter().map(|&i| sub.key[i]).collect();
            self.note(TraceKind::WeylConjugate { word });
        }
        let Some(c) = rs.is_under_unchecked(&dom, lam) else {
            self.note(TraceKind::ZeroByDominance);
            return Ok(BigUint::zero());
        };
        if let Some(b) = bound {
            assert!(
                c.height() < b,
                "recursion must strictly decrease the height of lam - mu"
            );
        }
        if c.is_zero() {
            self.note(TraceKind::HighestWeight);
            return Ok(BigUint::one());
        }
        let key = (sub.key.clone(), lam.clone(), dom.clone());
        if let Some(m) = self.memo.get(&key) {
            self.counters.cache_hits += 1;
            return Ok(m.clone());
        }
        let support = c.support();
        let factors = rs.diagram_components(&support);
        if support.len() < rs.rank() {
            let indices = support.iter().map(|&i| sub.key[i]).collect();
            self.note(TraceKind::LeviRestrict { indices });
        }
        let mut result = BigUint::one();
        for local in &factors {
            let child = if local.len() == rs.rank() {
                sub.clone()
            } else {
                self.subsystem(sub, local)
            };
            let m = self.solve_factor(
                &child,
                &lam.restrict(local),
                &dom.restrict(local),
                &c.restrict(local),
            )?;
            result *= m;
            if result.is_zero() {
                break;
            }
        }
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    /// Simple system, `c` with full support.
    fn solve_factor(
        &mut self,
        sub: &Sub<F>,
        lam: &Weight,
        mu: &Weight,
        c: &RootVector,
    ) -> Result<BigUint> {
        let rs = sub.rs.clone();
        let lowered = lowerable(lam, c);
        let (lam2, mu2) = lower_on(lam, mu, c, &lowered);
        if &lam2 != lam {
            self.note(TraceKind::LowerWeight {
                system: sub.key.to_vec(),
                from: lam.clone(),
                to: lam2.clone(),
                lowered: lowered
                    .iter()
                    .copied()
                    .filter(|&j| lam[j] != c[j])
                    .collect(),
            });
        }
        if self.algorithm == Algorithm::Auto
            && is_simple_type_a(&rs)
            && c.coeffs().iter().all(|&x| x == 1)
        {
            if self.trace.is_some() {
                let path = super::reductions::path_order(&rs);
                let support = type_a_support(&rs, &lam2)
                    .iter()
                    .map(|&p| sub.key[path[p - 1]])
                    .collect();
                self.note(TraceKind::TypeAClosed { support });
            }
            return Ok(type_a_closed(&rs, &lam2)?.0);
        }
        let best = (0..rs.rank())
            .filter(|&j| c[j] > 0 && c[j] <= lam2[j])
            .min_by_key(|&j| (rs.phi_j_len(j), j));
        match best {
            Some(j) => {
                self.note(TraceKind::FastFreudenthal { j: sub.key[j] });
                self.fast_step(sub, &lam2, &mu2, c, j)
            }
            None => {
                self.note(TraceKind::ClassicalFreudenthal);
                self.classical_step(sub, &lam2, &mu2, c)
            }
        }
    }

    /// `m(mu) = (1/c_j) sum_{r=1}^{c_j} sum_{level_j(alpha) > 0} level_j(alpha) m(mu + r alpha)`.
    fn fast_step(
        &mut self,
        sub: &Sub<F>,
        lam: &Weight,
        mu: &Weight,
        c: &RootVector,
        j: usize,
    ) -> Result<BigUint> {
        let rs = sub.rs.clone();
        let cj = c[j];
        let height = c.height();
        let mut sum = BigUint::zero();
        for r in 1..=cj {
            for (k, root) in rs.positive_roots().iter().enumerate() {
                let level = root.level(j);
                if level == 0 {
                    continue;
                }
                self.tally_term(true);
                let nu = shifted(mu, rs.root_weight(k), r);
                let m = self.sub_query(sub, lam, &nu, height)?;
                sum += m * BigUint::from(level as u64);
            }
        }
        let (quot, rem) = sum.div_rem(&BigUint::from(cj as u64));
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                numerator: sum.to_string(),
                denominator: cj.to_string(),
            });
        }
        Ok(quot)
    }

    /// Classical Freudenthal at `(lam, mu)` for arbitrary `mu` under `lam`,
    /// sub-queries through the dispatcher.
    fn classical_step(
        &mut self,
        sub: &Sub<F>,
        lam: &Weight,
        mu: &Weight,
        c: &RootVector,
    ) -> Result<BigUint> {
        let rs = sub.rs.clone();
        let d = self.dlm_from_root(&rs, lam, c);
        if d.is_zero() {
            return Ok(BigUint::zero());
        }
        let height = c.height();
        let mut sum = F::zero();
        for (k, root) in rs.positive_roots().iter().enumerate() {
            for r in 1.. {
                let nu = shifted(mu, rs.root_weight(k), r);
                let dom = rs.dominant_representative(&nu);
                if rs.is_under_unchecked(&dom, lam).is_none() {
                    break;
                }
                self.tally_term(false);
                let m = self.sub_query(sub, lam, &nu, height)?;
                self.counters.inner_products += 1;
                let pairing = rs.pair_root(&nu, root);
                if !m.is_zero() {
                    sum = sum + to_scalar::<F>(&m)? * pairing;
                }
            }
        }
        divide(F::from_i64(2) * sum, d)
    }

    fn classical(&mut self, mu: &Weight) -> Result<BigUint> {
        let rs = self.top.rs.clone();
        let lam = self.lam.clone();
        let dom = rs.dominant_representative(mu);
        let Some(c) = rs.is_under_unchecked(&dom, &lam) else {
            return Ok(BigUint::zero());
        };
        if c.is_zero() {
            self.classical_memo.insert(dom, BigUint::one());
            return Ok(BigUint::one());
        }
        if let Some(m) = self.classical_memo.get(&dom) {
            self.counters.cache_hits += 1;
            return Ok(m.clone());
        }
        let d = self.dlm_from_root(&rs, &lam, &c);
        if d.is_zero() {
            self.classical_memo.insert(dom, BigUint::zero());
            return Ok(BigUint::zero());
        }
        let mut sum = F::zero();
        for (k, root) in rs.positive_roots().iter().enumerate() {
            for r in 1.. {
                let nu = shifted(&dom, rs.root_weight(k), r);
                let nu_dom = rs.dominant_representative(&nu);
                if rs.is_under_unchecked(&nu_dom, &lam).is_none() {
                    break;
                }
                self.tally_term(false);
                self.depth += 1;
                let m = self.classical(&nu_dom);
                self.depth -= 1;
                let m = m?;
                self.counters.inner_products += 1;
                let pairing = rs.pair_root(&nu, root);
                if !m.is_zero() {
                    sum = sum + to_scalar::<F>(&m)? * pairing;
                }
            }
        }
        let m = divide(F::from_i64(2) * sum, d)?;
        self.classical_memo.insert(dom, m.clone());
        Ok(m)
    }

    /// `dlm` for `lam - mu = gamma`, costing two inner products.
    fn dlm_from_root(&mut self, rs: &RootSystem<F>, lam: &Weight, gamma: &RootVector) -> F {
        self.counters.inner_products += 2;
        let shifted = lam + rs.rho();
        let gamma_w = rs.root_to_weight_coords(gamma).expect("same rank");
        F::from_i64(2) * rs.pair_root(&shifted, gamma) - rs.pair_root(&gamma_w, gamma)
    }
}

fn shifted(mu: &Weight, root: &Weight, r: i64) -> Weight {
    Weight::new(
        mu.coords()
            .iter()
            .zip(root.coords())
            .map(|(a, b)| a + r * b)
            .collect(),
    )
}

fn to_scalar<F: Scalar>(m: &BigUint) -> Result<F> {
    F::from_bigint(&BigInt::from(m.clone())).ok_or_else(|| Error::ScalarOverflow(m.to_string()))
}

fn divide<F: Scalar>(numerator: F, denominator: F) -> Result<BigUint> {
    let q = numerator.clone() / denominator.clone();
    match q.exact_integer() {
        Some(n) if !n.is_negative() => Ok(n.to_biguint().expect("non-negative")),
        _ => Err(Error::InexactDivision {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        }),
    }
}
