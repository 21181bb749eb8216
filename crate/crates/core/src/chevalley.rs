//! Split simple Lie algebras in a Chevalley basis.
//!
//! The basis is `H_1..H_ℓ` (simple coroots) followed by `X_α` in root order.
//! Conventions: `[H_i, X_α] = α_i^∨(α) X_α`, `[X_α, X_{−α}] = H_α` and
//! `[X_α, X_β] = N_{α,β} X_{α+β}`. The signs of `N` are fixed by declaring
//! them positive on extraspecial pairs.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::rational::{self, q, Q};
use crate::rootsys::RootDatum;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    datum: RootDatum,
    dim: usize,
    /// `brackets[i * dim + j]`: sparse expansion of `[e_i, e_j]`.
    brackets: Vec<Vec<(usize, i64)>>,
    killing: RatMatrix,
    killing_inv: RatMatrix,
    labels: Vec<String>,
}

impl LieAlgebra {
    /// Builds the Chevalley basis, the Killing form and its inverse. The
    /// Jacobi identity is checked on every basis triple.
    pub fn new(datum: RootDatum) -> Result<Self> {
        let l = datum.rank();
        let nr = datum.num_roots();
        let dim = l + nr;
        let mut consts = StructureConstants::new(&datum);
        let mut brackets = vec![Vec::new(); dim * dim];

        for a in 0..nr {
            let xa = l + a;
            for i in 0..l {
                let c = datum.coroot_pairing(datum.root(a), i);
                if c != 0 {
                    brackets[i * dim + xa] = vec![(xa, c)];
                    brackets[xa * dim + i] = vec![(xa, -c)];
                }
            }
            for b in 0..nr {
                let xb = l + b;
                let sum: Vec<i64> = datum.root(a).iter().zip(datum.root(b)).map(|(x, y)| x + y).collect();
                if sum.iter().all(|&c| c == 0) {
                    brackets[xa * dim + xb] = coroot_terms(&datum, a)?;
                } else if let Some(c) = datum.root_index(&sum) {
                    brackets[xa * dim + xb] = vec![(l + c, consts.get(a, b)?)];
                }
            }
        }

        let labels = (0..l)
            .map(|i| format!("H{}", i + 1))
            .chain((0..nr).map(|a| {
                let parts: Vec<String> = datum.root(a).iter().map(i64::to_string).collect();
                format!("X[{}]", parts.join(","))
            }))
            .collect();

        let mut lie = LieAlgebra {
            datum,
            dim,
            brackets,
            killing: RatMatrix::zeros(0, 0),
            killing_inv: RatMatrix::zeros(0, 0),
            labels,
        };
        lie.check_jacobi()?;
        lie.killing = lie.compute_killing();
        lie.killing_inv = lie
            .killing
            .inverse()
            .map_err(|_| Error::consistency("Killing form is degenerate"))?;
        Ok(lie)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Basis index of `X_α` for root index `a`.
    pub fn root_vector(&self, a: usize) -> usize {
        self.rank() + a
    }

    /// Root index of basis element `i`, or `None` for Cartan elements.
    pub fn root_of(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.rank())
    }

    /// Weight of basis element `i` in simple-root coordinates.
    pub fn weight(&self, i: usize) -> Vec<i64> {
        match self.root_of(i) {
            Some(a) => self.datum.root(a).to_vec(),
            None => vec![0; self.rank()],
        }
    }

    /// Sparse expansion of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.brackets[i * self.dim + j]
    }

    /// `N_{α,β}` for root indices with `α+β` a root, else 0.
    pub fn n_const(&self, a: usize, b: usize) -> i64 {
        let (xa, xb) = (self.root_vector(a), self.root_vector(b));
        match self.bracket_basis(xa, xb) {
            [(k, c)] if self.root_of(*k).is_some() => *c,
            _ => 0,
        }
    }

    /// `[e_i, v]`.
    pub fn ad_basis(&self, i: usize, v: &[Q]) -> Vec<Q> {
        let mut out = rational::zeros(self.dim);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for &(k, c) in self.bracket_basis(i, j) {
                out[k] += vj * q(c);
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = rational::zeros(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for &(k, s) in self.bracket_basis(i, j) {
                    out[k] += &c * q(s);
                }
            }
        }
        out
    }

    /// Matrix of `ad u` (column `j` is `[u, e_j]`).
    pub fn ad_matrix(&self, u: &[Q]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for &(k, c) in self.bracket_basis(i, j) {
                    *m.get_mut(k, j) += ui * q(c);
                }
            }
        }
        m
    }

    pub fn ad_basis_matrix(&self, i: usize) -> RatMatrix {
        self.ad_matrix(&rational::unit_vec(self.dim, i))
    }

    pub fn killing(&self) -> &RatMatrix {
        &self.killing
    }

    pub fn killing_inv(&self) -> &RatMatrix {
        &self.killing_inv
    }

    pub fn killing_value(&self, u: &[Q], v: &[Q]) -> Q {
        self.killing.bilinear(u, v).expect("vectors of length dim g")
    }

    /// The K-dual basis: `Y_j = Σ_i (K^{-1})_{ij} X_i`, so `K(X_i, Y_j) = δ_ij`.
    pub fn dual_basis(&self) -> Vec<Vec<Q>> {
        (0..self.dim).map(|j| self.killing_inv.col(j)).collect()
    }

    /// `Σ_i ad(X_i) ad(Y_i)`.
    pub fn casimir_operator(&self) -> RatMatrix {
        let mut acc = RatMatrix::zeros(self.dim, self.dim);
        for (i, y) in self.dual_basis().into_iter().enumerate() {
            let prod = self.ad_basis_matrix(i).mul(&self.ad_matrix(&y)).expect("square");
            acc = acc.add(&prod).expect("square");
        }
        acc
    }

    fn compute_killing(&self) -> RatMatrix {
        let n = self.dim;
        let trace = |a: usize, b: usize| -> i64 {
            let mut tr = 0;
            for c in 0..n {
                for &(m, s) in self.bracket_basis(b, c) {
                    for &(r, t) in self.bracket_basis(a, m) {
                        if r == c {
                            tr += s * t;
                        }
                    }
                }
            }
            tr
        };
        let mut k = RatMatrix::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let v = q(trace(a, b));
                k.set(b, a, v.clone());
                k.set(a, b, v);
            }
        }
        k
    }

    /// Exact Jacobi check on all triples `i < j < k`.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let mut acc = vec![0i64; n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    acc.iter_mut().for_each(|x| *x = 0);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for &(m, s) in self.bracket_basis(b, c) {
                            for &(r, t) in self.bracket_basis(a, m) {
                                acc[r] += s * t;
                            }
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        return Err(Error::consistency(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `H_α` in the simple-coroot basis: `α^∨ = Σ_j c_j (|α_j|²/|α|²) α_j^∨`.
fn coroot_terms(d: &RootDatum, a: usize) -> Result<Vec<(usize, i64)>> {
    let la = d.root_form(a, a);
    d.root(a)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| {
            let s = d.simple(j);
            let v = q(c) * d.root_form(s, s) / &la;
            rational::to_i64(&v)
                .map(|x| (j, x))
                .ok_or_else(|| Error::consistency("non-integral coroot coefficient"))
        })
        .collect()
}

/// Memoized structure constants `N_{α,β}` via extraspecial pairs.
struct StructureConstants<'a> {
    d: &'a RootDatum,
    memo: HashMap<(usize, usize), i64>,
    /// Extraspecial pair of each non-simple positive root.
    extraspecial: HashMap<usize, (usize, usize)>,
}

impl<'a> StructureConstants<'a> {
    fn new(d: &'a RootDatum) -> Self {
        let mut extraspecial = HashMap::new();
        for xi in 0..d.num_positive() {
            for i in 0..d.rank() {
                let mut rest = d.root(xi).to_vec();
                rest[i] -= 1;
                if let Some(r) = d.root_index(&rest) {
                    if d.is_positive(r) {
                        extraspecial.insert(xi, (d.simple(i), r));
                        break;
                    }
                }
            }
        }
        StructureConstants {
            d,
            memo: HashMap::new(),
            extraspecial,
        }
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.d.root(a).iter().zip(self.d.root(b)).map(|(x, y)| x + y).collect();
        self.d.root_index(&s)
    }

    fn diff(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.d.root(a).iter().zip(self.d.root(b)).map(|(x, y)| x - y).collect();
        self.d.root_index(&s)
    }

    /// Largest `p` with `b − p·a` a root.
    fn p_value(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = b;
        while let Some(next) = self.diff(cur, a) {
            p += 1;
            cur = next;
        }
        p
    }

    fn len(&self, a: usize) -> Q {
        self.d.root_form(a, a)
    }

    fn get(&mut self, a: usize, b: usize) -> Result<i64> {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return Ok(v);
        }
        let v = self.compute(a, b)?;
        if v.abs() != self.p_value(a, b) + 1 {
            return Err(Error::consistency(format!(
                "structure constant N({a},{b}) = {v} has the wrong magnitude"
            )));
        }
        self.memo.insert((a, b), v);
        Ok(v)
    }

    fn compute(&mut self, a: usize, b: usize) -> Result<i64> {
        let d = self.d;
        let xi = self
            .sum(a, b)
            .ok_or_else(|| Error::consistency("N requested for a non-root sum"))?;
        let (pa, pb) = (d.is_positive(a), d.is_positive(b));
        if !pa && !pb {
            return Ok(-self.get(d.negative(a), d.negative(b))?);
        }
        if pa != pb {
            // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
            let c = d.negative(xi);
            let v = if d.is_positive(b) == d.is_positive(c) {
                self.len(c) / self.len(a) * q(self.get(b, c)?)
            } else {
                self.len(c) / self.len(b) * q(self.get(c, a)?)
            };
            return rational::to_i64(&v).ok_or_else(|| Error::consistency("non-integral N"));
        }
        let (r1, s1) = self.extraspecial[&xi];
        if (a, b) == (r1, s1) {
            return Ok(self.p_value(a, b) + 1);
        }
        if (b, a) == (r1, s1) {
            return Ok(-self.get(b, a)?);
        }
        // General positive pair (r, s) = (a, b) with extraspecial (r1, s1).
        let mut total = Q::zero();
        if let Some(t) = self.diff(b, r1) {
            let n1 = self.get(b, d.negative(r1))?;
            let n2 = self.get(a, d.negative(s1))?;
            total += q(n1 * n2) / self.len(t);
        }
        if let Some(t) = self.diff(a, r1) {
            let n1 = self.get(d.negative(r1), a)?;
            let n2 = self.get(b, d.negative(s1))?;
            total += q(n1 * n2) / self.len(t);
        }
        let v = self.len(xi) / q(self.get(r1, s1)?) * total;
        rational::to_i64(&v).ok_or_else(|| Error::consistency("non-integral N"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::unit_vec;
    use num_traits::One;

    fn lie(t: &str) -> LieAlgebra {
        LieAlgebra::new(RootDatum::new(t.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let g = lie("A1");
        // basis H, E, F
        assert_eq!(g.bracket_basis(0, 1), &[(1, 2)]);
        assert_eq!(g.bracket_basis(0, 2), &[(2, -2)]);
        assert_eq!(g.bracket_basis(1, 2), &[(0, 1)]);
        assert_eq!(g.killing().get(1, 2), &q(4));
        assert_eq!(g.killing().get(0, 0), &q(8));
    }

    #[test]
    fn killing_on_root_vectors() {
        for t in ["A2", "B3", "C3", "G2", "D4"] {
            let g = lie(t);
            let d = g.datum();
            for a in 0..d.num_roots() {
                let (xa, xn) = (g.root_vector(a), g.root_vector(d.negative(a)));
                let expect = q(2 * d.nu(a) * d.h_check());
                assert_eq!(g.killing().get(xa, xn), &expect, "{t}");
                let ha: Vec<Q> = {
                    let mut v = rational::zeros(g.dim());
                    for &(k, c) in g.bracket_basis(xa, xn) {
                        v[k] = q(c);
                    }
                    v
                };
                assert_eq!(g.killing_value(&ha, &ha), expect * q(2), "{t}");
            }
        }
        assert_eq!(lie("A2").killing().get(2, 2 + 3), &q(6));
    }

    #[test]
    fn structure_constants_bounded_and_antisymmetric() {
        for t in ["G2", "F4", "B3"] {
            let g = lie(t);
            let nr = g.datum().num_roots();
            for a in 0..nr {
                for b in 0..nr {
                    let n = g.n_const(a, b);
                    assert!(n.abs() <= 3);
                    assert_eq!(n, -g.n_const(b, a));
                }
            }
        }
        let g = lie("G2");
        assert_eq!(g.n_const(0, 1).abs(), 1);
    }

    #[test]
    fn killing_invariance() {
        let g = lie("G2");
        let n = g.dim();
        for z in 0..n {
            let adz = g.ad_basis_matrix(z);
            // K(ad z x, y) + K(x, ad z y) = 0 ⇔ (ad z)ᵀK + K(ad z) = 0
            let lhs = adz.transpose().mul(g.killing()).unwrap();
            let rhs = g.killing().mul(&adz).unwrap();
            assert!(lhs.add(&rhs).unwrap().is_zero());
        }
    }

    #[test]
    fn casimir_is_identity() {
        for t in ["A1", "A2", "C3", "G2"] {
            let g = lie(t);
            assert_eq!(g.casimir_operator(), RatMatrix::identity(g.dim()), "{t}");
        }
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        let g = lie("B2");
        let ys = g.dual_basis();
        for i in 0..g.dim() {
            for (j, y) in ys.iter().enumerate() {
                let v = g.killing_value(&unit_vec(g.dim(), i), y);
                assert_eq!(v, if i == j { Q::one() } else { Q::zero() });
            }
        }
    }

    #[test]
    fn killing_is_trace_of_ad_product() {
        let g = lie("A2");
        for (i, j) in [(0, 0), (0, 1), (2, 5), (3, 7), (4, 4)] {
            let tr = g.ad_basis_matrix(i).mul(&g.ad_basis_matrix(j)).unwrap().trace();
            assert_eq!(&tr, g.killing().get(i, j));
        }
    }
}
