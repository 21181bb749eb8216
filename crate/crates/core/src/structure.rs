//! Sparse structure constants of a commutative algebra.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::rational::{self, Q};

/// Products `b_a b_b = Σ_k c^k_{ab} b_k` of a commutative algebra, stored
/// once per unordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    /// Upper triangle in row-major order; each entry sorted by `k`.
    entries: Vec<Vec<(usize, Q)>>,
}

fn tri(dim: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * dim - a * (a + 1) / 2 + b
}

impl StructureTable {
    pub fn zero(dim: usize) -> Self {
        StructureTable {
            dim,
            entries: vec![Vec::new(); dim * (dim + 1) / 2],
        }
    }

    /// Builds a table from the product of each pair `a ≤ b`, given densely.
    pub fn from_products(dim: usize, products: Vec<Vec<Q>>) -> Result<Self> {
        if products.len() != dim * (dim + 1) / 2 {
            return Err(Error::dims("one product per unordered pair expected"));
        }
        let entries = products
            .into_iter()
            .map(|p| {
                if p.len() != dim {
                    return Err(Error::dims("product vector has the wrong length"));
                }
                Ok(sparsify(p))
            })
            .collect::<Result<_>>()?;
        Ok(StructureTable { dim, entries })
    }

    /// Builds a table from `(a, b, k, c)` quadruples; pairs may be given in
    /// either order but each unordered pair and `k` at most once.
    pub fn from_quadruples<I>(dim: usize, quads: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Q)>,
    {
        let mut t = StructureTable::zero(dim);
        for (a, b, k, c) in quads {
            if a >= dim || b >= dim || k >= dim {
                return Err(Error::dims(format!("index out of range in ({a}, {b}, {k})")));
            }
            let e = &mut t.entries[tri(dim, a, b)];
            if e.iter().any(|(kk, _)| *kk == k) {
                return Err(Error::invalid(format!("duplicate constant ({a}, {b}, {k})")));
            }
            if !c.is_zero() {
                e.push((k, c));
            }
        }
        for e in &mut t.entries {
            e.sort_by_key(|(k, _)| *k);
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse expansion of `b_a b_b`.
    pub fn get(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.entries[tri(self.dim, a, b)]
    }

    pub fn set(&mut self, a: usize, b: usize, v: Vec<(usize, Q)>) {
        let i = tri(self.dim, a, b);
        let mut v: Vec<_> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|(k, _)| *k);
        self.entries[i] = v;
    }

    /// Constant `c^k_{ab}`.
    pub fn constant(&self, a: usize, b: usize, k: usize) -> Q {
        self.get(a, b)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// `b_a b_b` as a dense vector.
    pub fn basis_product(&self, a: usize, b: usize) -> Vec<Q> {
        let mut out = rational::zeros(self.dim);
        for (k, c) in self.get(a, b) {
            out[*k] = c.clone();
        }
        out
    }

    /// Product of two elements in coordinates.
    pub fn mul(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = rational::zeros(self.dim);
        let su: Vec<usize> = (0..self.dim).filter(|&i| !u[i].is_zero()).collect();
        let sv: Vec<usize> = (0..self.dim).filter(|&i| !v[i].is_zero()).collect();
        for &a in &su {
            for &b in &sv {
                let c = &u[a] * &v[b];
                for (k, x) in self.get(a, b) {
                    out[*k] += &c * x;
                }
            }
        }
        out
    }

    pub fn square(&self, u: &[Q]) -> Vec<Q> {
        self.mul(u, u)
    }

    /// Matrix of `M_u: b ↦ u b` (column `b` is `u b_b`).
    pub fn left_mul_matrix(&self, u: &[Q]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for b in 0..self.dim {
                for (k, x) in self.get(a, b) {
                    *m.get_mut(*k, b) += ua * x;
                }
            }
        }
        m
    }

    /// All nonzero constants as `(a, b, k, c)` with `a ≤ b`, in lexicographic order.
    pub fn quadruples(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> + '_ {
        (0..self.dim)
            .flat_map(move |a| (a..self.dim).flat_map(move |b| self.get(a, b).iter().map(move |(k, c)| (a, b, *k, c))))
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// Rewrites the table in a new basis. `to_old` maps new coordinates to
    /// old ones and `to_new` is its inverse; both are linear maps given as
    /// closures on dense vectors.
    pub fn change_basis<F, G>(&self, to_old: F, to_new: G) -> Self
    where
        F: Fn(&[Q]) -> Vec<Q>,
        G: Fn(&[Q]) -> Vec<Q>,
    {
        let n = self.dim;
        let cols: Vec<Vec<Q>> = (0..n).map(|i| to_old(&rational::unit_vec(n, i))).collect();
        let mut out = StructureTable::zero(n);
        for a in 0..n {
            for b in a..n {
                let p = self.mul(&cols[a], &cols[b]);
                out.entries[tri(n, a, b)] = sparsify(to_new(&p));
            }
        }
        out
    }
}

fn sparsify(v: Vec<Q>) -> Vec<(usize, Q)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}
