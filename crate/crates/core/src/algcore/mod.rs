//! The algebra `A(g) = im S ⊂ End(g)`, its product, counit and trace form.
//!
//! A basis is selected from the monomials `X_i X_j` by exact elimination.
//! Since `S` is `g`-equivariant, `S(X_i X_j)` only has entries `(r, c)` with
//! `wt(r) − wt(c) = wt(i) + wt(j)`, so the elimination splits into one small
//! block per weight. Each block yields the lexicographically first
//! independent generators and the coordinates of every other generator.
//!
//! Products are evaluated with the four-argument formula
//!
//! ```text
//! S(AB)∙S(CD) = h∨/2 [S(A,(adC∘adD)B) + S((adC∘adD)A,B)]
//!             + h∨/2 [S(C,(adA∘adB)D) + S((adA∘adB)C,D)]
//!             + h∨/2 [S([A,C],[B,D]) + S([A,D],[B,C])]
//!             + 1/4 [K(A,C)S(B,D) + K(A,D)S(B,C) + K(B,C)S(A,D) + K(B,D)S(A,C)]
//! ```
//!
//! on monomial preimages and re-expressed through the cached generator
//! coordinates.

mod operators;
mod sym2;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

pub use operators::{e_s, is_k_symmetric, jordan_ad, p_map, p_of, s_map, s_of};
pub use sym2::Sym2;

pub(crate) use operators::Ctx;
use operators::SVec;

use crate::chevalley::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, Rref};
use crate::par::{self, Execution};
use crate::rational::{self, q, Q};
use crate::rootsys::{RootDatum, RootSystemSpec};
use crate::structure::StructureTable;
use crate::unitize::UnitizedAlgebra;

/// Basis of `A(g)` with the data needed to multiply.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    lie: LieAlgebra,
    generators: Vec<(usize, usize)>,
    gen_index: HashMap<(usize, usize), usize>,
    /// Coordinates of `S(generator)` in the basis.
    gen_coords: Vec<Vec<(usize, Q)>>,
    /// Generator index of each basis element, in generator order.
    basis: Vec<usize>,
    kernel_dim: usize,
}

/// Generator order: Cartan pairs, then mixed pairs, then root pairs, each
/// lexicographically.
fn generator_order(dim: usize, rank: usize) -> Vec<(usize, usize)> {
    let class = |i: usize, j: usize| {
        if j < rank {
            0
        } else if i < rank {
            1
        } else {
            2
        }
    };
    let mut g: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
    g.sort_by_key(|&(i, j)| (class(i, j), i, j));
    g
}

struct Block {
    gens: Vec<usize>,
    /// Local pivot columns.
    pivots: Vec<usize>,
    /// For each local column, coordinates in terms of the local pivots.
    coords: Vec<Vec<(usize, Q)>>,
}

fn eliminate_block(ctx: &Ctx<'_>, generators: &[(usize, usize)], gens: Vec<usize>) -> Block {
    let cols: Vec<Vec<(usize, usize, i64)>> = gens
        .iter()
        .map(|&g| {
            let (i, j) = generators[g];
            ctx.s2_entries(i, j)
        })
        .collect();
    let keys: BTreeSet<(usize, usize)> = cols.iter().flatten().map(|&(r, c, _)| (r, c)).collect();
    let row_of: HashMap<(usize, usize), usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut m = RatMatrix::zeros(keys.len(), gens.len());
    for (j, col) in cols.iter().enumerate() {
        for &(r, c, v) in col {
            m.set(row_of[&(r, c)], j, q(v));
        }
    }
    let Rref { matrix, pivots } = m.rref_with(Execution::Sequential);
    let coords = (0..gens.len())
        .map(|j| {
            (0..pivots.len())
                .filter_map(|k| {
                    let x = matrix.get(k, j);
                    (!x.is_zero()).then(|| (k, x.clone()))
                })
                .collect()
        })
        .collect();
    Block { gens, pivots, coords }
}

impl AlgebraBasis {
    /// Selects the basis of `A(g)` and the coordinates of every generator.
    pub fn new(lie: LieAlgebra, exec: Execution) -> Result<Self> {
        let n = lie.dim();
        let generators = generator_order(n, lie.rank());
        let gen_index: HashMap<(usize, usize), usize> = generators.iter().enumerate().map(|(g, &p)| (p, g)).collect();

        let mut by_weight: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (g, &(i, j)) in generators.iter().enumerate() {
            let w: Vec<i64> = lie.weight(i).iter().zip(lie.weight(j)).map(|(a, b)| a + b).collect();
            by_weight.entry(w).or_default().push(g);
        }
        let groups: Vec<Vec<usize>> = by_weight.into_values().collect();

        let ctx = Ctx::new(&lie);
        let blocks: Vec<Block> = par::map(exec, &groups, |gens| eliminate_block(&ctx, &generators, gens.clone()));

        let mut basis: Vec<usize> = blocks
            .iter()
            .flat_map(|b| b.pivots.iter().map(|&p| b.gens[p]))
            .collect();
        basis.sort_unstable();
        let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &g)| (g, k)).collect();

        let mut gen_coords = vec![Vec::new(); generators.len()];
        for b in &blocks {
            let global: Vec<usize> = b.pivots.iter().map(|&p| pos[&b.gens[p]]).collect();
            for (j, &g) in b.gens.iter().enumerate() {
                let mut c: Vec<(usize, Q)> = b.coords[j].iter().map(|(k, x)| (global[*k], x.clone())).collect();
                c.sort_by_key(|(k, _)| *k);
                gen_coords[g] = c;
            }
        }
        let kernel_dim = generators.len() - basis.len();
        drop(ctx);
        Ok(AlgebraBasis {
            lie,
            generators,
            gen_index,
            gen_coords,
            basis,
            kernel_dim,
        })
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn datum(&self) -> &RootDatum {
        self.lie.datum()
    }

    /// `dim A(g)`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All monomials `(i, j)`, `i ≤ j`, in generator order.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    /// The monomial whose image is basis element `k`.
    pub fn basis_pair(&self, k: usize) -> (usize, usize) {
        self.generators[self.basis[k]]
    }

    pub fn basis_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.dim()).map(|k| self.basis_pair(k)).collect()
    }

    /// Labels such as `S(H1*X[1,0])`.
    pub fn labels(&self) -> Vec<String> {
        let l = self.lie.labels();
        self.basis_pairs()
            .into_iter()
            .map(|(i, j)| format!("S({}*{})", l[i], l[j]))
            .collect()
    }

    /// Weight of basis element `k` in simple-root coordinates.
    pub fn weight(&self, k: usize) -> Vec<i64> {
        let (i, j) = self.basis_pair(k);
        self.lie
            .weight(i)
            .iter()
            .zip(self.lie.weight(j))
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Dimension of `ker S` on `Sym²g`.
    pub fn kernel_dim(&self) -> usize {
        self.kernel_dim
    }

    /// A basis of `ker S`: one vector per non-selected generator.
    pub fn kernel_basis(&self) -> Vec<Sym2> {
        let selected: BTreeSet<usize> = self.basis.iter().copied().collect();
        (0..self.generators.len())
            .filter(|g| !selected.contains(g))
            .map(|g| {
                let (i, j) = self.generators[g];
                let mut s = Sym2::monomial(i, j);
                for (k, c) in &self.gen_coords[g] {
                    let (a, b) = self.basis_pair(*k);
                    s.add_term(a, b, &-c.clone());
                }
                s
            })
            .collect()
    }

    /// Coordinates of `S(X_i X_j)`.
    pub fn generator_coords(&self, i: usize, j: usize) -> &[(usize, Q)] {
        let key = if i <= j { (i, j) } else { (j, i) };
        &self.gen_coords[self.gen_index[&key]]
    }

    /// Coordinates of `S(w)`.
    pub fn coords(&self, w: &Sym2) -> Vec<Q> {
        let mut out = rational::zeros(self.dim());
        for ((i, j), c) in w.terms() {
            for (k, x) in self.generator_coords(i, j) {
                out[*k] += c * x;
            }
        }
        out
    }

    /// A `Sym²g` preimage of the element with coordinates `u`.
    pub fn preimage(&self, u: &[Q]) -> Sym2 {
        let mut s = Sym2::new();
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = self.basis_pair(k);
                s.add_term(i, j, c);
            }
        }
        s
    }

    /// `S(X_i X_j)` for basis element `k` as a matrix.
    pub fn s_operator(&self, k: usize) -> RatMatrix {
        let (i, j) = self.basis_pair(k);
        s_map(&self.lie, i, j)
    }

    /// The operator in `End(g)` with coordinates `u`.
    pub fn operator(&self, u: &[Q]) -> RatMatrix {
        s_of(&self.lie, &self.preimage(u))
    }

    /// Four times the product formula on monomials `X_a X_b` and `X_c X_d`,
    /// as integer monomial coefficients.
    fn product4(&self, ctx: &Ctx<'_>, (a, b): (usize, usize), (c, d): (usize, usize)) -> BTreeMap<(usize, usize), i64> {
        let (va, vb, vc, vd): (SVec, SVec, SVec, SVec) = (vec![(a, 1)], vec![(b, 1)], vec![(c, 1)], vec![(d, 1)]);
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        let mut add = |u: &SVec, v: &SVec, coef: i64| {
            if coef == 0 {
                return;
            }
            for &(i, x) in u {
                for &(j, y) in v {
                    let key = if i <= j { (i, j) } else { (j, i) };
                    *acc.entry(key).or_insert(0) += coef * x * y;
                }
            }
        };
        let hc = ctx.hc;
        add(&va, &ctx.jordan2(&vc, &vd, &vb), hc);
        add(&ctx.jordan2(&vc, &vd, &va), &vb, hc);
        add(&vc, &ctx.jordan2(&va, &vb, &vd), hc);
        add(&ctx.jordan2(&va, &vb, &vc), &vd, hc);
        add(&ctx.bracket(&va, &vc), &ctx.bracket(&vb, &vd), 2 * hc);
        add(&ctx.bracket(&va, &vd), &ctx.bracket(&vb, &vc), 2 * hc);
        add(&vb, &vd, ctx.killing(&va, &vc));
        add(&vb, &vc, ctx.killing(&va, &vd));
        add(&va, &vd, ctx.killing(&vb, &vc));
        add(&va, &vc, ctx.killing(&vb, &vd));
        acc.retain(|_, v| *v != 0);
        acc
    }

    /// The product formula on `Sym²g` representatives.
    pub fn product_sym2(&self, w: &Sym2, w2: &Sym2) -> Sym2 {
        let ctx = Ctx::new(&self.lie);
        let quarter = rational::qf(1, 4);
        let mut out = Sym2::new();
        for (m, c) in w.terms() {
            for (m2, c2) in w2.terms() {
                let coef = c * c2 * &quarter;
                for ((i, j), v) in self.product4(&ctx, m, m2) {
                    out.add_term(i, j, &(&coef * q(v)));
                }
            }
        }
        out
    }

    fn product_basis_ctx(&self, ctx: &Ctx<'_>, a: usize, b: usize) -> Vec<(usize, Q)> {
        let mut out = rational::zeros(self.dim());
        for ((i, j), v) in self.product4(ctx, self.basis_pair(a), self.basis_pair(b)) {
            let v = q(v);
            for (k, x) in self.generator_coords(i, j) {
                out[*k] += &v * x;
            }
        }
        let quarter = rational::qf(1, 4);
        out.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c * &quarter))
            .collect()
    }

    /// Product of basis elements `a` and `b`, sparse.
    pub fn product_basis(&self, a: usize, b: usize) -> Vec<(usize, Q)> {
        self.product_basis_ctx(&Ctx::new(&self.lie), a, b)
    }

    /// Product of two elements in coordinates, evaluated on preimages
    /// without the structure table.
    pub fn product(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        self.coords(&self.product_sym2(&self.preimage(u), &self.preimage(v)))
    }

    /// `ε` on the basis: `Tr(S(X_i X_j)) / dim g`.
    pub fn epsilon(&self) -> Vec<Q> {
        let dim_g = q(self.lie.dim() as i64);
        (0..self.dim()).map(|k| self.s_operator(k).trace() / &dim_g).collect()
    }

    /// Coordinates of `Id_g = S(e_S)/(h∨+1)`.
    pub fn unit_coords(&self) -> Vec<Q> {
        let hc1 = q(self.datum().h_check() + 1);
        rational::scale_vec(&self.coords(&e_s(&self.lie)), &(Q::one() / hc1))
    }

    /// Fills the structure table, in parallel over unordered basis pairs.
    pub fn structure_table(&self, exec: Execution) -> StructureTable {
        let n = self.dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let ctx = Ctx::new(&self.lie);
        let prods = par::map(exec, &pairs, |&(a, b)| self.product_basis_ctx(&ctx, a, b));
        let mut t = StructureTable::zero(n);
        for ((a, b), p) in pairs.into_iter().zip(prods) {
            t.set(a, b, p);
        }
        t
    }
}

/// `A(g)` with its structure constants, counit, trace form and unit.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    basis: AlgebraBasis,
    table: StructureTable,
    epsilon: Vec<Q>,
    tau: RatMatrix,
    unit: Vec<Q>,
}

impl AlgebraTable {
    /// Computes the structure table of an already selected basis.
    pub fn new(basis: AlgebraBasis, exec: Execution) -> Result<Self> {
        let unit = basis.unit_coords();
        if basis.operator(&unit) != RatMatrix::identity(basis.lie.dim()) {
            return Err(Error::consistency("Id_g is not in the image of S"));
        }
        let table = basis.structure_table(exec);
        let epsilon = basis.epsilon();
        let n = basis.dim();
        let tau = RatMatrix::from_fn(n, n, |a, b| table.get(a, b).iter().map(|(k, c)| c * &epsilon[*k]).sum());
        Ok(AlgebraTable {
            basis,
            table,
            epsilon,
            tau,
            unit,
        })
    }

    /// Builds root system, Lie algebra, basis and table for a type.
    pub fn build(spec: RootSystemSpec, exec: Execution) -> Result<Self> {
        let lie = LieAlgebra::new(RootDatum::new(spec)?)?;
        AlgebraTable::new(AlgebraBasis::new(lie, exec)?, exec)
    }

    pub fn basis(&self) -> &AlgebraBasis {
        &self.basis
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.basis.lie
    }

    pub fn datum(&self) -> &RootDatum {
        self.basis.datum()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn epsilon(&self) -> &[Q] {
        &self.epsilon
    }

    pub fn tau_gram(&self) -> &RatMatrix {
        &self.tau
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn mul(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        self.table.mul(u, v)
    }

    pub fn counit(&self, a: &[Q]) -> Q {
        rational::dot(&self.epsilon, a)
    }

    pub fn tau(&self, a: &[Q], b: &[Q]) -> Q {
        self.counit(&self.mul(a, b))
    }

    /// Coordinates of `S(w)`.
    pub fn coords(&self, w: &Sym2) -> Vec<Q> {
        self.basis.coords(w)
    }

    /// Writes the algebra as `Unit(V, f)` with `V = ker ε`.
    pub fn split_counit(&self) -> Result<CounitSplit> {
        CounitSplit::new(&self.table, &self.unit, &self.epsilon)
    }
}

/// `A = k·e ⊕ V` with `V = ker ε` spanned by `b_k − ε_k e` for `k ≠ pivot`.
#[derive(Clone, Debug)]
pub struct CounitSplit {
    pub algebra: UnitizedAlgebra,
    pivot: usize,
    unit: Vec<Q>,
    epsilon: Vec<Q>,
}

impl CounitSplit {
    /// Splits any commutative table with unit `unit` and a counit
    /// `epsilon` satisfying `epsilon(unit) = 1`.
    pub fn new(table: &StructureTable, unit: &[Q], epsilon: &[Q]) -> Result<Self> {
        let n = table.dim();
        if n == 0 || unit.len() != n || epsilon.len() != n {
            return Err(Error::dims("unit and counit must match the table dimension"));
        }
        if !rational::dot(epsilon, unit).is_one() {
            return Err(Error::invalid("counit does not take the value 1 on the unit"));
        }
        let pivot = unit
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::invalid("zero unit"))?;
        let split = CounitSplit {
            pivot,
            unit: unit.to_vec(),
            epsilon: epsilon.to_vec(),
            algebra: UnitizedAlgebra::new(StructureTable::zero(0), RatMatrix::zeros(0, 0))?,
        };
        let t = table.change_basis(|y| split.from_split(y), |x| split.to_split(x));
        let n = n - 1;
        let mut dot = StructureTable::zero(n);
        let mut f = RatMatrix::zeros(n, n);
        for a in 0..=n {
            for b in a..=n {
                let p = t.get(a, b);
                if a == 0 {
                    let expect: Vec<(usize, Q)> = vec![(b, Q::one())];
                    if p != expect.as_slice() {
                        return Err(Error::invalid("unit is not an identity of the table"));
                    }
                    continue;
                }
                let f_ab = p
                    .iter()
                    .find(|(k, _)| *k == 0)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_default();
                f.set(a - 1, b - 1, f_ab.clone());
                f.set(b - 1, a - 1, f_ab);
                dot.set(
                    a - 1,
                    b - 1,
                    p.iter()
                        .filter(|(k, _)| *k > 0)
                        .map(|(k, c)| (k - 1, c.clone()))
                        .collect(),
                );
            }
        }
        Ok(CounitSplit {
            algebra: UnitizedAlgebra::new(dot, f)?,
            ..split
        })
    }

    /// Original coordinates to `(ε(x), V-coordinates)`.
    pub fn to_split(&self, x: &[Q]) -> Vec<Q> {
        let p = self.pivot;
        let s = &x[p] / &self.unit[p];
        let mut out = vec![rational::dot(&self.epsilon, x)];
        out.extend((0..x.len()).filter(|&k| k != p).map(|k| &x[k] - &s * &self.unit[k]));
        out
    }

    /// Inverse of [`CounitSplit::to_split`].
    pub fn from_split(&self, y: &[Q]) -> Vec<Q> {
        let p = self.pivot;
        let mut x = rational::scale_vec(&self.unit, &y[0]);
        let others = (0..self.unit.len()).filter(|&k| k != p);
        for (c, k) in y[1..].iter().zip(others) {
            if c.is_zero() {
                continue;
            }
            x[k] += c;
            rational::axpy(&mut x, &-(c * &self.epsilon[k]), &self.unit);
        }
        x
    }

    /// `Unit(V, f)` transported back to the original basis.
    pub fn reassembled_table(&self) -> StructureTable {
        self.algebra
            .table()
            .change_basis(|x| self.to_split(x), |y| self.from_split(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::unit_vec;

    fn table(t: &str) -> AlgebraTable {
        AlgebraTable::build(t.parse().unwrap(), Execution::default()).unwrap()
    }

    #[test]
    fn sl2_is_one_dimensional() {
        let a = table("A1");
        assert_eq!(a.dim(), 1);
        assert_eq!(a.table().get(0, 0).len(), 1);
        assert_eq!(a.unit().len(), 1);
        assert_eq!(a.mul(a.unit(), a.unit()), a.unit().to_vec());
        assert_eq!(a.counit(a.unit()), Q::one());
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(table("A2").dim(), 9);
        assert_eq!(table("G2").dim(), 28);
    }

    #[test]
    fn unit_is_identity_and_counit_normalized() {
        let a = table("B2");
        for k in 0..a.dim() {
            assert_eq!(a.mul(a.unit(), &unit_vec(a.dim(), k)), unit_vec(a.dim(), k));
        }
        assert_eq!(a.counit(a.unit()), Q::one());
        assert!(a.tau_gram().is_symmetric());
    }

    #[test]
    fn table_agrees_with_preimage_evaluation() {
        let a = table("A2");
        let u: Vec<Q> = (0..9).map(|i| rational::qf(i as i64 - 4, 3)).collect();
        let v: Vec<Q> = (0..9).map(|i| q((i * i % 5) as i64)).collect();
        assert_eq!(a.mul(&u, &v), a.basis().product(&u, &v));
    }

    #[test]
    fn kernel_has_complementary_dimension() {
        let a = table("G2");
        let g = a.lie().dim();
        assert_eq!(a.basis().kernel_dim() + a.dim(), g * (g + 1) / 2);
        for w in a.basis().kernel_basis().iter().take(5) {
            assert!(s_of(a.lie(), w).is_zero());
        }
    }

    #[test]
    fn split_round_trip() {
        for t in ["A1", "A2", "G2"] {
            let a = table(t);
            let s = a.split_counit().unwrap();
            assert_eq!(s.algebra.dim_v(), a.dim() - 1);
            assert_eq!(&s.reassembled_table(), a.table(), "{t}");
        }
    }
}
