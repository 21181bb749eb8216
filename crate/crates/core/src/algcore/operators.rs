//! The operators `P(XY)` and `S(XY) = h∨·(ad X ∘ ad Y) + P(XY)` on `g`.

use num_traits::Zero;

use super::sym2::Sym2;
use crate::chevalley::LieAlgebra;
use crate::exactla::RatMatrix;
use crate::rational::{q, qf, Q};

/// Sparse vector of `g` with integer coefficients.
pub(crate) type SVec = Vec<(usize, i64)>;

/// Integer Killing matrix and dense scratch space for sparse brackets.
pub(crate) struct Ctx<'a> {
    pub lie: &'a LieAlgebra,
    pub k: Vec<Vec<i64>>,
    pub hc: i64,
}

impl<'a> Ctx<'a> {
    pub fn new(lie: &'a LieAlgebra) -> Self {
        let n = lie.dim();
        let k = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| crate::rational::to_i64(lie.killing().get(i, j)).expect("integral Killing form"))
                    .collect()
            })
            .collect();
        Ctx {
            lie,
            k,
            hc: lie.datum().h_check(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn bracket(&self, u: &SVec, v: &SVec) -> SVec {
        let mut acc = vec![0i64; self.dim()];
        for &(i, a) in u {
            for &(j, b) in v {
                for &(k, c) in self.lie.bracket_basis(i, j) {
                    acc[k] += a * b * c;
                }
            }
        }
        collect(acc)
    }

    /// `[C,[D,v]] + [D,[C,v]]`, twice the Jordan product of `ad C` and `ad D`.
    pub fn jordan2(&self, c: &SVec, d: &SVec, v: &SVec) -> SVec {
        let a = self.bracket(c, &self.bracket(d, v));
        let b = self.bracket(d, &self.bracket(c, v));
        add(&a, &b)
    }

    pub fn killing(&self, u: &SVec, v: &SVec) -> i64 {
        let mut s = 0;
        for &(i, a) in u {
            for &(j, b) in v {
                s += a * b * self.k[i][j];
            }
        }
        s
    }

    /// Entries `(row, col, value)` of `2·S(X_i X_j)`.
    pub fn s2_entries(&self, i: usize, j: usize) -> Vec<(usize, usize, i64)> {
        let n = self.dim();
        let (xi, xj) = (vec![(i, 1)], vec![(j, 1)]);
        let mut out = Vec::new();
        for c in 0..n {
            let xc = vec![(c, 1)];
            let mut col = vec![0i64; n];
            for (k, v) in self.jordan2(&xi, &xj, &xc) {
                col[k] += self.hc * v;
            }
            col[i] += self.k[j][c];
            col[j] += self.k[i][c];
            for (r, v) in col.into_iter().enumerate() {
                if v != 0 {
                    out.push((r, c, v));
                }
            }
        }
        out
    }
}

pub(crate) fn collect(acc: Vec<i64>) -> SVec {
    acc.into_iter().enumerate().filter(|(_, v)| *v != 0).collect()
}

pub(crate) fn add(a: &SVec, b: &SVec) -> SVec {
    let n = a.iter().chain(b).map(|(i, _)| i + 1).max().unwrap_or(0);
    let mut acc = vec![0i64; n];
    for &(i, v) in a.iter().chain(b) {
        acc[i] += v;
    }
    collect(acc)
}

/// `P(X_i X_j) = ½[X_i ⊗ K(X_j, ·) + X_j ⊗ K(X_i, ·)]`.
pub fn p_map(lie: &LieAlgebra, i: usize, j: usize) -> RatMatrix {
    let n = lie.dim();
    let k = lie.killing();
    let half = qf(1, 2);
    let mut m = RatMatrix::zeros(n, n);
    for c in 0..n {
        *m.get_mut(i, c) += k.get(j, c) * &half;
        *m.get_mut(j, c) += k.get(i, c) * &half;
    }
    m
}

/// `S(X_i X_j)`.
pub fn s_map(lie: &LieAlgebra, i: usize, j: usize) -> RatMatrix {
    let ctx = Ctx::new(lie);
    s_map_ctx(&ctx, i, j)
}

pub(crate) fn s_map_ctx(ctx: &Ctx<'_>, i: usize, j: usize) -> RatMatrix {
    let n = ctx.dim();
    let mut m = RatMatrix::zeros(n, n);
    for (r, c, v) in ctx.s2_entries(i, j) {
        m.set(r, c, qf(v, 2));
    }
    m
}

/// `P` extended linearly to `Sym²g`.
pub fn p_of(lie: &LieAlgebra, s: &Sym2) -> RatMatrix {
    let n = lie.dim();
    let mut m = RatMatrix::zeros(n, n);
    for ((i, j), c) in s.terms() {
        m.add_scaled(c, &p_map(lie, i, j)).expect("square");
    }
    m
}

/// `S` extended linearly to `Sym²g`.
pub fn s_of(lie: &LieAlgebra, s: &Sym2) -> RatMatrix {
    let ctx = Ctx::new(lie);
    let n = lie.dim();
    let mut m = RatMatrix::zeros(n, n);
    for ((i, j), c) in s.terms() {
        let half = c * qf(1, 2);
        for (r, col, v) in ctx.s2_entries(i, j) {
            *m.get_mut(r, col) += &half * q(v);
        }
    }
    m
}

/// `e_S = Σ_i X_i Y_i` for the K-dual basis `Y_i`.
pub fn e_s(lie: &LieAlgebra) -> Sym2 {
    let kinv = lie.killing_inv();
    let mut s = Sym2::new();
    for i in 0..lie.dim() {
        for j in 0..lie.dim() {
            let c = kinv.get(i, j);
            if !c.is_zero() {
                s.add_term(i, j, c);
            }
        }
    }
    s
}

/// Whether `K·M` is symmetric, i.e. `M` is self-adjoint for the Killing form.
pub fn is_k_symmetric(lie: &LieAlgebra, m: &RatMatrix) -> bool {
    lie.killing().mul(m).map(|km| km.is_symmetric()).unwrap_or(false)
}

/// `(ad C ∘ ad D)(v)` for arbitrary vectors, with `∘` the Jordan product.
pub fn jordan_ad(lie: &LieAlgebra, c: &[Q], d: &[Q], v: &[Q]) -> Vec<Q> {
    let a = lie.bracket(c, &lie.bracket(d, v));
    let b = lie.bracket(d, &lie.bracket(c, v));
    a.iter().zip(&b).map(|(x, y)| (x + y) * qf(1, 2)).collect()
}
