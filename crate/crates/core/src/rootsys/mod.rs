//! Root systems: Cartan data, positive roots, the invariant form and the
//! Weyl-group operations needed by the multiplicity algorithms.
//!
//! Conventions: simple roots are numbered as in Bourbaki, the Cartan matrix
//! is `A[i][j] = <alpha_j, alpha_i>`, and the form is normalized so that the
//! short roots of each simple factor have squared length 2. Indices in the
//! API are 0-based.

mod cartan;

use std::collections::{HashSet, VecDeque};
use std::marker::PhantomData;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

pub use cartan::{cartan_matrix, Family};

use crate::error::{check_len, Error, Result};
use crate::scalar::{dot_int, invert, Scalar};
use crate::weight::{RootVector, Weight};

/// A simple factor of a (possibly semisimple) root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// Indices of the factor's simple roots inside the ambient system.
    pub indices: Vec<usize>,
}

/// Immutable Cartan datum of a semisimple root system.
#[derive(Debug, Clone)]
pub struct RootSystem<F = BigRational> {
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<F>,
    gram: Vec<Vec<F>>,
    cartan_inverse: Vec<Vec<F>>,
    // den * A^{-1}, for integral membership tests
    inverse_numer: Vec<Vec<i64>>,
    inverse_denom: i64,
    pos_roots: Vec<RootVector>,
    root_weights: Vec<Weight>,
    rho: Weight,
    _scalar: PhantomData<F>,
}

impl<F: Scalar> RootSystem<F> {
    /// Simple root system of the given type.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(family, rank)?;
        let mut rs = Self::from_cartan(cartan);
        rs.components = vec![Component {
            family,
            rank,
            indices: (0..rank).collect(),
        }];
        Ok(rs)
    }

    /// Product constructor: `cartan` must be a (block-decomposable) Cartan
    /// matrix of finite type. Used for Levi subsystems.
    pub(crate) fn from_cartan(cartan: Vec<Vec<i64>>) -> Self {
        let l = cartan.len();
        let norms = root_norms(&cartan);
        let symmetrizer: Vec<F> = norms.iter().map(|&n| F::from_ratio(n, 2)).collect();
        Self::assemble(cartan, symmetrizer, l)
    }

    fn assemble(cartan: Vec<Vec<i64>>, symmetrizer: Vec<F>, l: usize) -> Self {
        let gram = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| symmetrizer[i].clone() * F::from_i64(cartan[i][j]))
                    .collect()
            })
            .collect();
        let inverse = invert(&cartan).expect("Cartan matrix of finite type is invertible");
        let inverse_denom = inverse
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let inverse_numer = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| {
                        let v = q.numer() * (&inverse_denom / q.denom());
                        i64::try_from(v).expect("inverse Cartan entries are small")
                    })
                    .collect()
            })
            .collect();
        let cartan_inverse = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| {
                        F::from_bigint(q.numer()).unwrap() / F::from_bigint(q.denom()).unwrap()
                    })
                    .collect()
            })
            .collect();
        let pos_roots = positive_roots(&cartan);
        let root_weights = pos_roots.iter().map(|r| weight_of(&cartan, r)).collect();
        let components = classify(&cartan, &pos_roots);
        RootSystem {
            components,
            cartan,
            symmetrizer,
            gram,
            cartan_inverse,
            inverse_numer,
            inverse_denom: i64::try_from(inverse_denom).unwrap(),
            pos_roots,
            root_weights,
            rho: Weight::new(vec![1; l]),
            _scalar: PhantomData,
        }
    }

    /// Same system with the invariant form multiplied by `factor > 0`.
    pub fn rescaled(&self, factor: F) -> Self {
        assert!(
            factor.is_positive(),
            "form rescaling factor must be positive"
        );
        let symmetrizer = self
            .symmetrizer
            .iter()
            .map(|d| d.clone() * factor.clone())
            .collect();
        let mut rs = Self::assemble(self.cartan.clone(), symmetrizer, self.rank());
        rs.components = self.components.clone();
        rs
    }

    /// Levi subsystem on the simple roots `indices` (strictly increasing).
    /// The form is the restriction of the ambient one.
    pub fn levi(&self, indices: &[usize]) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        let cartan: Vec<Vec<i64>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let symmetrizer = indices
            .iter()
            .map(|&i| self.symmetrizer[i].clone())
            .collect();
        Self::assemble(cartan, symmetrizer, indices.len())
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn family_ranks(&self) -> Vec<(Family, usize)> {
        self.components.iter().map(|c| (c.family, c.rank)).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    /// e.g. `A3` or `A1xA1`.
    pub fn name(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("{}{}", c.family, c.rank))
            .collect();
        if parts.is_empty() {
            "trivial".to_string()
        } else {
            parts.join("x")
        }
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[F] {
        &self.symmetrizer
    }

    /// `(alpha_i, alpha_j)`.
    pub fn gram_simple(&self) -> &[Vec<F>] {
        &self.gram
    }

    pub fn cartan_inverse(&self) -> &[Vec<F>] {
        &self.cartan_inverse
    }

    /// Simple roots first, then by height, ties broken lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.pos_roots
    }

    /// Fundamental-weight coordinates of `positive_roots()[k]`.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.root_weights[k]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Number of positive roots with positive `j`-level.
    pub fn phi_j_len(&self, j: usize) -> usize {
        self.pos_roots.iter().filter(|r| r.level(j) > 0).count()
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        check_len(self.rank(), w.rank())
    }

    pub fn inner(&self, v: &Weight, w: &Weight) -> Result<F> {
        self.check_weight(v)?;
        self.check_weight(w)?;
        Ok(self.inner_unchecked(v, w))
    }

    pub(crate) fn inner_unchecked(&self, v: &Weight, w: &Weight) -> F {
        // (v, w) = sum_k c_k(v) d_k w_k with c(v) = A^{-1} v
        let mut acc = F::zero();
        for k in 0..self.rank() {
            if w[k] == 0 {
                continue;
            }
            let num: i64 = self.inverse_numer[k]
                .iter()
                .zip(v.coords())
                .map(|(a, b)| a * b)
                .sum();
            if num != 0 {
                acc = acc + self.symmetrizer[k].clone() * F::from_i64(num * w[k]);
            }
        }
        acc / F::from_i64(self.inverse_denom)
    }

    /// `(w, gamma)` for `gamma` in the root lattice.
    pub fn pair_root(&self, w: &Weight, gamma: &RootVector) -> F {
        let prod: Vec<i64> = gamma
            .coeffs()
            .iter()
            .zip(w.coords())
            .map(|(c, a)| c * a)
            .collect();
        dot_int(&prod, &self.symmetrizer)
    }

    /// `(gamma, delta)` for root-lattice vectors.
    pub fn root_inner(&self, gamma: &RootVector, delta: &RootVector) -> F {
        self.pair_root(&weight_of(&self.cartan, delta), gamma)
    }

    pub fn root_to_weight_coords(&self, gamma: &RootVector) -> Result<Weight> {
        check_len(self.rank(), gamma.rank())?;
        Ok(weight_of(&self.cartan, gamma))
    }

    /// Simple-root coordinates of `v`, over the rationals.
    pub fn weight_to_root_coords(&self, v: &Weight) -> Result<Vec<F>> {
        self.check_weight(v)?;
        Ok(self
            .cartan_inverse
            .iter()
            .map(|row| dot_int(v.coords(), row))
            .collect())
    }

    /// The `c` with `lam - mu = sum c_r alpha_r`, when every `c_r` is a
    /// non-negative integer.
    pub fn is_under(&self, mu: &Weight, lam: &Weight) -> Result<Option<RootVector>> {
        self.check_weight(mu)?;
        self.check_weight(lam)?;
        Ok(self.is_under_unchecked(mu, lam))
    }

    pub(crate) fn is_under_unchecked(&self, mu: &Weight, lam: &Weight) -> Option<RootVector> {
        let diff: Vec<i64> = lam
            .coords()
            .iter()
            .zip(mu.coords())
            .map(|(a, b)| a - b)
            .collect();
        let mut coeffs = Vec::with_capacity(self.rank());
        for row in &self.inverse_numer {
            let num: i64 = row.iter().zip(&diff).map(|(a, b)| a * b).sum();
            if num < 0 || num % self.inverse_denom != 0 {
                return None;
            }
            coeffs.push(num / self.inverse_denom);
        }
        Some(RootVector::new_unchecked(coeffs))
    }

    /// `s_i(mu) = mu - <mu, alpha_i> alpha_i`.
    pub fn reflect(&self, mu: &Weight, i: usize) -> Weight {
        let mut out = mu.clone();
        self.reflect_in_place(&mut out, i);
        out
    }

    fn reflect_in_place(&self, mu: &mut Weight, i: usize) {
        let m = mu[i];
        if m != 0 {
            for (j, coord) in mu.coords_mut().iter_mut().enumerate() {
                *coord -= m * self.cartan[j][i];
            }
        }
    }

    /// Applies the reflections of `word` left to right: `word = [i, j]` gives `s_j(s_i(mu))`.
    pub fn apply_word(&self, mu: &Weight, word: &[usize]) -> Weight {
        let mut out = mu.clone();
        for &i in word {
            self.reflect_in_place(&mut out, i);
        }
        out
    }

    /// The dominant weight in the orbit of `mu`, with the reflections taking
    /// `mu` there (see [`apply_word`](Self::apply_word)).
    pub fn dominant_conjugate(&self, mu: &Weight) -> (Weight, Vec<usize>) {
        let mut out = mu.clone();
        let mut word = Vec::new();
        while let Some(i) = out.coords().iter().position(|&a| a < 0) {
            self.reflect_in_place(&mut out, i);
            word.push(i);
        }
        (out, word)
    }

    pub fn dominant_representative(&self, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        while let Some(i) = out.coords().iter().position(|&a| a < 0) {
            self.reflect_in_place(&mut out, i);
        }
        out
    }

    pub fn weyl_order(&self) -> BigUint {
        self.components
            .iter()
            .map(|c| c.family.weyl_order(c.rank))
            .product()
    }

    /// `prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha)`.
    pub fn weyl_dimension(&self, lam: &Weight) -> Result<BigUint> {
        self.check_weight(lam)?;
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam.clone()));
        }
        let shifted = lam + &self.rho;
        let d: Vec<BigRational> = self
            .symmetrizer
            .iter()
            .map(Scalar::to_big_rational)
            .collect();
        let mut q = BigRational::one();
        for root in &self.pos_roots {
            let num = dot_int(&product(root, &shifted), &d);
            let den = dot_int(&product(root, &self.rho), &d);
            q = q * num / den;
        }
        Ok(q.to_integer()
            .to_biguint()
            .expect("Weyl dimension is positive"))
    }

    /// `|W mu| = |W| / |W_mu|`, the stabilizer being the parabolic subgroup on
    /// the simple reflections fixing `mu`.
    pub fn orbit_size(&self, mu: &Weight) -> Result<BigUint> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.clone()));
        }
        let fixed: Vec<usize> = (0..self.rank()).filter(|&i| mu[i] == 0).collect();
        let stabilizer = if fixed.is_empty() {
            BigUint::one()
        } else {
            self.levi(&fixed).weyl_order()
        };
        Ok(self.weyl_order() / stabilizer)
    }

    /// Connected components of the Dynkin diagram restricted to `indices`.
    pub fn diagram_components(&self, indices: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in indices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &j in indices {
                    if self.cartan[i][j] != 0 && seen.insert(j) {
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }
}

fn product(root: &RootVector, w: &Weight) -> Vec<i64> {
    root.coeffs()
        .iter()
        .zip(w.coords())
        .map(|(c, a)| c * a)
        .collect()
}

fn weight_of(cartan: &[Vec<i64>], gamma: &RootVector) -> Weight {
    Weight::new(
        cartan
            .iter()
            .map(|row| row.iter().zip(gamma.coeffs()).map(|(a, c)| a * c).sum())
            .collect(),
    )
}

/// Squared lengths of the simple roots, short roots of each factor set to 2.
fn root_norms(cartan: &[Vec<i64>]) -> Vec<i64> {
    let l = cartan.len();
    let mut norms: Vec<Option<BigRational>> = vec![None; l];
    for start in 0..l {
        if norms[start].is_some() {
            continue;
        }
        norms[start] = Some(BigRational::one());
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..l {
                if i != j && cartan[i][j] != 0 && norms[j].is_none() {
                    // A[i][j] |alpha_i|^2 = A[j][i] |alpha_j|^2
                    let n = norms[i].clone().unwrap() * BigInt::from(cartan[i][j])
                        / BigInt::from(cartan[j][i]);
                    norms[j] = Some(n);
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        let min = comp
            .iter()
            .map(|&i| norms[i].clone().unwrap())
            .min()
            .unwrap();
        let scale = BigRational::from_integer(BigInt::from(2)) / min;
        for &i in &comp {
            norms[i] = norms[i].take().map(|n| n * scale.clone());
        }
    }
    norms
        .into_iter()
        .map(|n| {
            let n = n.unwrap();
            assert!(
                n.is_integer(),
                "root lengths of a finite-type Cartan matrix"
            );
            i64::try_from(n.to_integer()).unwrap()
        })
        .collect()
}

/// Height-by-height closure using root strings: `beta + alpha_i` is a root iff
/// `p - <beta, alpha_i> > 0`, where `p` is the length of the string below `beta`.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<RootVector> {
    let l = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    seen.extend(layer.iter().cloned());
    let mut roots = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                let mut p = 0;
                let mut below = beta.clone();
                loop {
                    below[i] -= 1;
                    if below[i] < 0 || !seen.contains(&below) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..l).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.into_iter().map(RootVector::new_unchecked).collect()
}

fn classify(cartan: &[Vec<i64>], roots: &[RootVector]) -> Vec<Component> {
    let l = cartan.len();
    let norms = root_norms(cartan);
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for start in 0..l {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..l {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let rank = comp.len();
        let n_roots = roots
            .iter()
            .filter(|r| r.support().iter().all(|i| comp.binary_search(i).is_ok()))
            .count();
        let max_bond = comp
            .iter()
            .flat_map(|&i| comp.iter().map(move |&j| -cartan[i][j]))
            .max()
            .unwrap_or(0);
        let long = comp.iter().filter(|&&i| norms[i] > 2).count();
        let family = match max_bond {
            3 => Family::G,
            2 if rank == 4 && n_roots == 24 && long == 2 => Family::F,
            2 if rank == 2 => {
                if norms[comp[0]] > norms[comp[1]] {
                    Family::B
                } else {
                    Family::C
                }
            }
            2 if long > rank - long => Family::B,
            2 => Family::C,
            _ if n_roots == rank * (rank + 1) / 2 => Family::A,
            _ if n_roots == rank * (rank - 1) => Family::D,
            _ => Family::E,
        };
        out.push(Component {
            family,
            rank,
            indices: comp,
        });
    }
    out
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Rs = RootSystem<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    const ALL_TYPES: &[(Family, usize)] = &[
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 5),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 5),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 3),
        (Family::D, 4),
        (Family::D, 6),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ];

    #[test]
    fn positive_root_counts_match_the_classical_table() {
        for &(f, l) in ALL_TYPES {
            let rs = Rs::build(f, l).unwrap();
            assert_eq!(
                rs.positive_roots().len(),
                f.positive_root_count(l),
                "{f}{l}"
            );
        }
    }

    #[test]
    fn cartan_and_root_invariants() {
        for &(f, l) in ALL_TYPES {
            let rs = Rs::build(f, l).unwrap();
            let a = rs.cartan();
            for i in 0..l {
                assert_eq!(a[i][i], 2);
                for j in 0..l {
                    if i != j {
                        assert!((-3..=0).contains(&a[i][j]));
                    }
                }
            }
            // D A symmetric and positive definite
            let g = rs.gram_simple();
            for i in 0..l {
                for j in 0..l {
                    assert_eq!(g[i][j], g[j][i]);
                }
            }
            for k in 1..=l {
                let minor: Vec<Vec<i64>> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| g[i][j].to_integer().try_into().unwrap())
                            .collect()
                    })
                    .collect();
                assert!(det(&minor) > 0, "{f}{l} minor {k}");
            }
            let roots = rs.positive_roots();
            for i in 0..l {
                assert_eq!(roots[i], RootVector::simple(l, i));
            }
            let bound = if f.is_classical() { 2 } else { 6 };
            for r in roots {
                assert!(r.coeffs().iter().all(|&c| (0..=bound).contains(&c)));
            }
            for w in roots[l..].windows(2) {
                assert!((w[0].height(), w[0].coeffs()) < (w[1].height(), w[1].coeffs()));
            }
        }
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != c)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum()
    }

    #[test]
    fn a2_positive_roots() {
        let rs = Rs::build(Family::A, 2).unwrap();
        let roots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_level_bound_is_attained() {
        let rs = Rs::build(Family::G, 2).unwrap();
        assert_eq!(rs.positive_roots().len(), 6);
        let max = rs
            .positive_roots()
            .iter()
            .flat_map(|r| r.coeffs().to_vec())
            .max();
        assert_eq!(max, Some(3));
        let e8 = Rs::build(Family::E, 8).unwrap();
        let max = e8
            .positive_roots()
            .iter()
            .flat_map(|r| r.coeffs().to_vec())
            .max();
        assert_eq!(max, Some(6));
    }

    #[test]
    fn invalid_type() {
        assert_eq!(
            Rs::build(Family::E, 5).unwrap_err(),
            Error::InvalidType {
                family: 'E',
                rank: 5
            }
        );
    }

    #[test]
    fn inner_products_a2() {
        let rs = Rs::build(Family::A, 2).unwrap();
        let alpha1 = rs.root_to_weight_coords(&RootVector::simple(2, 0)).unwrap();
        assert_eq!(rs.inner(&Weight::from([1, 0]), &alpha1).unwrap(), q(1, 1));
        assert_eq!(
            rs.inner(&Weight::zero(2), &Weight::from([3, -7])).unwrap(),
            q(0, 1)
        );
        assert_eq!(rs.inner(rs.rho(), rs.rho()).unwrap(), q(2, 1));
        assert_eq!(
            rs.inner(&Weight::from([1]), &Weight::from([1, 0]))
                .unwrap_err(),
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn inner_restricted_to_simple_roots_is_the_gram_matrix() {
        for &(f, l) in ALL_TYPES {
            let rs = Rs::build(f, l).unwrap();
            for i in 0..l {
                for j in 0..l {
                    let ai = rs.root_to_weight_coords(&RootVector::simple(l, i)).unwrap();
                    let aj = rs.root_to_weight_coords(&RootVector::simple(l, j)).unwrap();
                    let v = rs.inner(&ai, &aj).unwrap();
                    assert_eq!(v, rs.gram_simple()[i][j]);
                    assert_eq!(
                        v,
                        rs.symmetrizer()[i].clone() * BigRational::from_i64(rs.cartan()[i][j])
                    );
                }
            }
        }
    }

    #[test]
    fn coordinate_conversions() {
        let rs = Rs::build(Family::A, 2).unwrap();
        let gamma = RootVector::new(vec![1, 1]).unwrap();
        assert_eq!(
            rs.root_to_weight_coords(&gamma).unwrap(),
            Weight::from([1, 1])
        );
        assert_eq!(
            rs.weight_to_root_coords(&Weight::from([1, 0])).unwrap(),
            vec![q(2, 3), q(1, 3)]
        );
        assert_eq!(
            rs.root_to_weight_coords(&RootVector::zero(2)).unwrap(),
            Weight::zero(2)
        );
    }

    #[test]
    fn dominance() {
        let rs = Rs::build(Family::A, 2).unwrap();
        let c = rs
            .is_under(&Weight::from([0, 0]), &Weight::from([1, 1]))
            .unwrap();
        assert_eq!(c, Some(RootVector::new(vec![1, 1]).unwrap()));
        assert_eq!(
            rs.is_under(&Weight::from([0, 0]), &Weight::from([1, 0]))
                .unwrap(),
            None
        );
        let lam = Weight::from([4, 2]);
        assert_eq!(rs.is_under(&lam, &lam).unwrap(), Some(RootVector::zero(2)));
    }

    #[test]
    fn dominant_conjugates() {
        let a2 = Rs::build(Family::A, 2).unwrap();
        assert_eq!(
            a2.dominant_conjugate(&Weight::from([-1, 0])),
            (Weight::from([0, 1]), vec![0, 1])
        );
        assert_eq!(
            a2.dominant_conjugate(&Weight::from([1, 1])),
            (Weight::from([1, 1]), vec![])
        );
        let a1 = Rs::build(Family::A, 1).unwrap();
        assert_eq!(
            a1.dominant_conjugate(&Weight::from([-3])),
            (Weight::from([3]), vec![0])
        );
        let mu = Weight::from([-1, 0]);
        let (dom, word) = a2.dominant_conjugate(&mu);
        assert_eq!(a2.apply_word(&mu, &word), dom);
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = Rs::build(Family::A, 1).unwrap();
        for n in 0..6 {
            assert_eq!(
                a1.weyl_dimension(&Weight::from([n])).unwrap(),
                BigUint::from(n as u64 + 1)
            );
        }
        let a2 = Rs::build(Family::A, 2).unwrap();
        assert_eq!(
            a2.weyl_dimension(&Weight::from([1, 1])).unwrap(),
            BigUint::from(8u32)
        );
        let a3 = Rs::build(Family::A, 3).unwrap();
        assert_eq!(
            a3.weyl_dimension(&Weight::from([1, 0, 0])).unwrap(),
            BigUint::from(4u32)
        );
        let g2 = Rs::build(Family::G, 2).unwrap();
        assert_eq!(
            g2.weyl_dimension(&Weight::from([1, 0])).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            g2.weyl_dimension(&Weight::from([0, 1])).unwrap(),
            BigUint::from(14u32)
        );
        let e8 = Rs::build(Family::E, 8).unwrap();
        assert_eq!(
            e8.weyl_dimension(&Weight::fundamental(8, 7)).unwrap(),
            BigUint::from(248u32)
        );
        assert!(matches!(
            a2.weyl_dimension(&Weight::from([-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn orbit_sizes() {
        let a2 = Rs::build(Family::A, 2).unwrap();
        assert_eq!(
            a2.orbit_size(&Weight::from([0, 0])).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            a2.orbit_size(&Weight::from([1, 1])).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            a2.orbit_size(&Weight::from([1, 0])).unwrap(),
            BigUint::from(3u32)
        );
        let b3 = Rs::build(Family::B, 3).unwrap();
        // short roots of B3: orbit of lambda_1 has 6 elements
        assert_eq!(
            b3.orbit_size(&Weight::from([1, 0, 0])).unwrap(),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn levi_subsystems_are_classified() {
        let a4 = Rs::build(Family::A, 4).unwrap();
        let levi = a4.levi(&[0, 3]);
        assert_eq!(levi.family_ranks(), vec![(Family::A, 1), (Family::A, 1)]);
        assert_eq!(levi.name(), "A1xA1");
        let e8 = Rs::build(Family::E, 8).unwrap();
        assert_eq!(
            e8.levi(&[0, 1, 2, 3, 4, 5, 6]).family_ranks(),
            vec![(Family::E, 7)]
        );
        assert_eq!(e8.levi(&[1, 2, 3, 4]).family_ranks(), vec![(Family::D, 4)]);
        let f4 = Rs::build(Family::F, 4).unwrap();
        assert_eq!(f4.levi(&[0, 1, 2]).family_ranks(), vec![(Family::B, 3)]);
        assert_eq!(f4.levi(&[1, 2, 3]).family_ranks(), vec![(Family::C, 3)]);
        assert_eq!(f4.levi(&[0, 1, 2, 3]).family_ranks(), vec![(Family::F, 4)]);
        let b4 = Rs::build(Family::B, 4).unwrap();
        assert_eq!(b4.levi(&[2, 3]).family_ranks(), vec![(Family::B, 2)]);
        let c4 = Rs::build(Family::C, 4).unwrap();
        assert_eq!(c4.levi(&[2, 3]).family_ranks(), vec![(Family::C, 2)]);
        assert_eq!(
            Rs::build(Family::D, 3).unwrap().family_ranks(),
            vec![(Family::D, 3)]
        );
        assert_eq!(b4.levi(&[0, 1, 2]).family_ranks(), vec![(Family::A, 3)]);
    }

    #[test]
    fn dimension_and_orbits_survive_rescaling() {
        for &(f, l) in &[(Family::B, 3), (Family::G, 2), (Family::C, 3)] {
            let rs = RootSystem::<Rational64>::build(f, l).unwrap();
            let scaled = rs.rescaled(Rational64::new(7, 3));
            for lam in [Weight::from(vec![1; l]), Weight::fundamental(l, l - 1)] {
                assert_eq!(
                    rs.weyl_dimension(&lam).unwrap(),
                    scaled.weyl_dimension(&lam).unwrap()
                );
                assert_eq!(
                    rs.orbit_size(&lam).unwrap(),
                    scaled.orbit_size(&lam).unwrap()
                );
            }
        }
    }
}
