//! `A(g)` realized inside `End(V)` for a small representation `V`:
//! `σ(S(XY)) = 6h∨ π(X)∘π(Y) − ½K(X,Y) Id_V`.

use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algcore::{AlgebraBasis, Sym2};
use crate::chevalley::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::rational::{self, q, qf, Q};
use crate::rootsys::{Family, RootDatum, RootSystemSpec};

/// A representation of `g` given by one matrix per Chevalley basis element.
#[derive(Clone, Debug)]
pub struct Representation {
    lie: LieAlgebra,
    matrices: Vec<RatMatrix>,
    mu: Q,
}

impl Representation {
    /// Validates the bracket relations and the trace normalization
    /// `Tr(π(x)π(y)) = (μ·dimV/dimG) K(x,y)`, returning the representation
    /// with its Casimir eigenvalue `μ`.
    pub fn new(lie: LieAlgebra, matrices: Vec<RatMatrix>) -> Result<Self> {
        let n = lie.dim();
        if matrices.len() != n {
            return Err(Error::dims(format!("{} matrices given, dim g = {n}", matrices.len())));
        }
        let dv = matrices[0].rows();
        if dv == 0 || matrices.iter().any(|m| m.rows() != dv || m.cols() != dv) {
            return Err(Error::dims("matrices must be square of one common size"));
        }
        let labels = lie.labels();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = matrices[i].commutator(&matrices[j])?;
                let mut rhs = RatMatrix::zeros(dv, dv);
                for &(k, c) in lie.bracket_basis(i, j) {
                    rhs.add_scaled(&q(c), &matrices[k])?;
                }
                if lhs != rhs {
                    return Err(Error::invalid(format!(
                        "commutator check fails on ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }

        // H_1 is never K-isotropic, so it fixes the normalization.
        let tr = |i: usize, j: usize| matrices[i].mul(&matrices[j]).map(|m| m.trace());
        let k = lie.killing();
        let ratio = tr(0, 0)? / k.get(0, 0);
        for i in 0..n {
            for j in i..n {
                if tr(i, j)? != &ratio * k.get(i, j) {
                    return Err(Error::invalid(format!(
                        "trace normalization fails on ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let mu = ratio * q(n as i64) / q(dv as i64);
        Ok(Representation { lie, matrices, mu })
    }

    /// Extends images of the simple root vectors `X_{±α_i}` to all of `g`
    /// through `[X_{α_i}, X_β] = N X_{α_i+β}`, then validates.
    pub fn from_chevalley_generators(lie: LieAlgebra, e: Vec<RatMatrix>, f: Vec<RatMatrix>) -> Result<Self> {
        let d = lie.datum().clone();
        let l = d.rank();
        if e.len() != l || f.len() != l {
            return Err(Error::dims("one e and one f matrix per simple root expected"));
        }
        let dv = e[0].rows();
        let mut mats: Vec<Option<RatMatrix>> = vec![None; lie.dim()];
        for i in 0..l {
            let (a, na) = (d.simple(i), d.negative(d.simple(i)));
            mats[lie.root_vector(a)] = Some(e[i].clone());
            mats[lie.root_vector(na)] = Some(f[i].clone());
            mats[i] = Some(e[i].commutator(&f[i])?);
        }
        // Positive roots come in order of height, so predecessors are ready.
        for a in 0..d.num_positive() {
            for (sign, idx) in [(1i64, a), (-1, d.negative(a))] {
                if mats[lie.root_vector(idx)].is_some() {
                    continue;
                }
                let root = d.root(idx);
                let (i, b) = (0..l)
                    .find_map(|i| {
                        let mut r = root.to_vec();
                        r[i] -= sign;
                        d.root_index(&r).map(|b| (i, b))
                    })
                    .ok_or_else(|| Error::consistency("root without a simple predecessor"))?;
                let s = if sign > 0 { d.simple(i) } else { d.negative(d.simple(i)) };
                let n = lie.n_const(s, b);
                let gen = if sign > 0 { &e[i] } else { &f[i] };
                let prev = mats[lie.root_vector(b)].as_ref().expect("lower height first");
                mats[lie.root_vector(idx)] = Some(gen.commutator(prev)?.scale(&qf(1, n)));
            }
        }
        let matrices = mats
            .into_iter()
            .map(|m| m.unwrap_or_else(|| RatMatrix::zeros(dv, dv)))
            .collect();
        Representation::new(lie, matrices)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn dim_v(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrices(&self) -> &[RatMatrix] {
        &self.matrices
    }

    /// Casimir eigenvalue `μ_π`.
    pub fn mu(&self) -> &Q {
        &self.mu
    }

    /// `π(x)` for `x` in coordinates.
    pub fn image(&self, x: &[Q]) -> RatMatrix {
        let dv = self.dim_v();
        let mut m = RatMatrix::zeros(dv, dv);
        for (c, mi) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                m.add_scaled(c, mi).expect("same size");
            }
        }
        m
    }

    /// `α_π = (6μ−1)μ·dimV / (2(2+dimG)dimG)`.
    pub fn alpha(&self) -> Q {
        let d = q(self.lie.dim() as i64);
        let dv = q(self.dim_v() as i64);
        (q(6) * &self.mu - q(1)) * &self.mu * dv / (q(2) * (q(2) + &d) * d)
    }

    /// Whether `σ` is defined for this pairing of type and dimension.
    pub fn sigma_supported(&self) -> bool {
        let spec = self.lie.datum().spec();
        let dim = match (spec.family, spec.rank) {
            (Family::A, 2) => 3,
            (Family::G, 2) => 7,
            (Family::F, 4) => 26,
            (Family::E, 6) => 27,
            (Family::E, 7) => 56,
            _ => return false,
        };
        dim == self.dim_v()
    }

    /// `σ(S(X_i X_j))`.
    pub fn sigma_monomial(&self, i: usize, j: usize) -> RatMatrix {
        let hc6 = q(6 * self.lie.datum().h_check());
        let half_k = self.lie.killing().get(i, j) * qf(1, 2);
        self.matrices[i]
            .jordan(&self.matrices[j])
            .expect("same size")
            .scale(&hc6)
            .sub(&RatMatrix::scalar(self.dim_v(), &half_k))
            .expect("same size")
    }

    /// `σ(S(w))` for `w ∈ Sym²g`.
    pub fn sigma_sym2(&self, w: &Sym2) -> RatMatrix {
        let dv = self.dim_v();
        let mut m = RatMatrix::zeros(dv, dv);
        for ((i, j), c) in w.terms() {
            m.add_scaled(c, &self.sigma_monomial(i, j)).expect("same size");
        }
        m
    }

    /// `σ` on an element of `A(g)` given in the coordinates of `basis`.
    pub fn sigma(&self, basis: &AlgebraBasis, u: &[Q]) -> Result<RatMatrix> {
        if !self.sigma_supported() {
            return Err(Error::Unsupported(format!(
                "no σ for type {} with a {}-dimensional representation",
                self.lie.datum().spec(),
                self.dim_v()
            )));
        }
        if u.len() != basis.dim() {
            return Err(Error::dims("coordinate vector does not match dim A"));
        }
        Ok(self.sigma_sym2(&basis.preimage(u)))
    }

    /// Residual of `Proj_{π(g)}(σ(S(X²))∘π(Y)) = π(S(X²)Y)`, projecting with
    /// the trace form on `π(g)`.
    pub fn pi_proj_residual(&self, x: &[Q], y: &[Q]) -> Result<RatMatrix> {
        let n = self.lie.dim();
        let gram = RatMatrix::from_fn(n, n, |i, j| {
            self.matrices[i].mul(&self.matrices[j]).expect("same size").trace()
        });
        let gram_inv = gram.inverse()?;
        let x2 = Sym2::product(x, x);
        let lhs_full = self.sigma_sym2(&x2).jordan(&self.image(y))?;
        let pairings: Vec<Q> = self
            .matrices
            .iter()
            .map(|m| lhs_full.mul(m).map(|p| p.trace()))
            .collect::<Result<_>>()?;
        let coeffs = gram_inv.mul_vec(&pairings)?;
        let lhs = self.image(&coeffs);
        let sx2y = crate::algcore::s_of(&self.lie, &x2).mul_vec(y)?;
        lhs.sub(&self.image(&sx2y))
    }
}

/// Matrix unit `E_{ij}` of size `n`.
fn unit_matrix(n: usize, i: usize, j: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    m.set(i, j, Q::one());
    m
}

/// The tautological representation of `sl_3` on `k³`.
pub fn natural_rep_sl3() -> Result<Representation> {
    let lie = LieAlgebra::new(RootDatum::new(RootSystemSpec::new(Family::A, 2)?)?)?;
    let e = vec![unit_matrix(3, 0, 1), unit_matrix(3, 1, 2)];
    let f = vec![unit_matrix(3, 1, 0), unit_matrix(3, 2, 1)];
    Representation::from_chevalley_generators(lie, e, f)
}

/// On-disk representation format; matrices are row-major lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RepFile {
    #[serde(rename = "type")]
    pub type_name: String,
    pub dim_v: usize,
    pub matrices: Vec<Vec<String>>,
}

impl RepFile {
    pub fn from_rep(rep: &Representation) -> Self {
        RepFile {
            type_name: rep.lie.datum().spec().to_string(),
            dim_v: rep.dim_v(),
            matrices: rep
                .matrices
                .iter()
                .map(|m| m.flatten().iter().map(rational::fmt_q).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn into_rep(self) -> Result<Representation> {
        let spec: RootSystemSpec = self.type_name.parse()?;
        let lie = LieAlgebra::new(RootDatum::new(spec)?)?;
        let dv = self.dim_v;
        let matrices = self
            .matrices
            .iter()
            .map(|flat| {
                if flat.len() != dv * dv {
                    return Err(Error::dims(format!(
                        "matrix with {} entries, expected {}",
                        flat.len(),
                        dv * dv
                    )));
                }
                let vals = flat.iter().map(|s| rational::parse_q(s)).collect::<Result<Vec<_>>>()?;
                RatMatrix::from_rows(vals.chunks(dv).map(<[Q]>::to_vec).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(lie, matrices)
    }
}

pub fn save_rep(rep: &Representation, path: &Path) -> Result<()> {
    std::fs::write(path, RepFile::from_rep(rep).to_json()?)?;
    Ok(())
}

pub fn load_rep(path: &Path) -> Result<Representation> {
    let f: RepFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    f.into_rep()
}

fn eps3(p: &RatMatrix) -> Q {
    p.trace() / q(3)
}

/// `P*Q = [½ε(P∘Q) − (3/2)ε(P)ε(Q)]I + ε(Q)P + ε(P)Q` with `ε = Tr/3`.
pub fn sl3_model_product(p: &RatMatrix, r: &RatMatrix) -> Result<RatMatrix> {
    if p.rows() != 3 || !p.is_square() || r.rows() != 3 || !r.is_square() {
        return Err(Error::dims("the model product lives on 3x3 matrices"));
    }
    let (ep, er) = (eps3(p), eps3(r));
    let c = eps3(&p.jordan(r)?) * qf(1, 2) - qf(3, 2) * &ep * &er;
    let mut out = RatMatrix::scalar(3, &c);
    out.add_scaled(&er, p)?;
    out.add_scaled(&ep, r)?;
    Ok(out)
}

/// Structure constants of `A(sl_3)` in `basis`, computed by transporting the
/// model product through `σ`.
pub fn sl3_transported_table(rep: &Representation, basis: &AlgebraBasis) -> Result<crate::StructureTable> {
    let n = basis.dim();
    let images: Vec<RatMatrix> = (0..n)
        .map(|k| rep.sigma(basis, &rational::unit_vec(n, k)))
        .collect::<Result<_>>()?;
    let span = RatMatrix::from_cols(&images.iter().map(RatMatrix::flatten).collect::<Vec<_>>())?;
    let mut products = Vec::with_capacity(n * (n + 1) / 2);
    for a in 0..n {
        for b in a..n {
            let p = sl3_model_product(&images[a], &images[b])?;
            let c = span
                .solve(&p.flatten())?
                .ok_or_else(|| Error::consistency("model product leaves the image of σ"))?;
            products.push(c);
        }
    }
    crate::StructureTable::from_products(n, products)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Execution;
    use crate::AlgebraTable;

    #[test]
    fn natural_rep_normalization() {
        let r = natural_rep_sl3().unwrap();
        assert_eq!(r.dim_v(), 3);
        assert_eq!(r.mu(), &qf(4, 9));
        let h1 = &r.matrices()[0];
        assert_eq!(
            h1.to_rows(),
            vec![vec![q(1), q(0), q(0)], vec![q(0), q(-1), q(0)], vec![q(0), q(0), q(0)]]
        );
        // Tr(π(x)π(y)) = K(x,y)/6
        let k = r.lie().killing();
        for i in 0..8 {
            for j in 0..8 {
                let t = r.matrices()[i].mul(&r.matrices()[j]).unwrap().trace();
                assert_eq!(t, k.get(i, j) / q(6));
            }
        }
    }

    #[test]
    fn model_product_examples() {
        let p = RatMatrix::from_i64(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, -1]]).unwrap();
        assert_eq!(sl3_model_product(&p, &p).unwrap(), RatMatrix::scalar(3, &qf(1, 3)));
        let r = RatMatrix::from_i64(&[vec![2, 1, 0], vec![0, 5, -1], vec![3, 0, 7]]).unwrap();
        assert_eq!(sl3_model_product(&RatMatrix::identity(3), &r).unwrap(), r);
    }

    #[test]
    fn sigma_of_square_matches_closed_form() {
        let r = natural_rep_sl3().unwrap();
        let x: Vec<Q> = [1, -2, 3, 0, 1, -1, 2, 1].iter().map(|&v| q(v)).collect();
        let px = r.image(&x);
        let px2 = px.mul(&px).unwrap();
        let expect = px2
            .scale(&q(18))
            .sub(&RatMatrix::scalar(3, &(px2.trace() * q(3))))
            .unwrap();
        assert_eq!(r.sigma_sym2(&Sym2::product(&x, &x)), expect);
    }

    #[test]
    fn transported_table_matches() {
        let r = natural_rep_sl3().unwrap();
        let t = AlgebraTable::build("A2".parse().unwrap(), Execution::default()).unwrap();
        assert_eq!(&sl3_transported_table(&r, t.basis()).unwrap(), t.table());
    }

    #[test]
    fn corrupted_matrix_is_rejected() {
        let r = natural_rep_sl3().unwrap();
        let mut f = RepFile::from_rep(&r);
        f.matrices[3][1] = "2".into();
        let err = f.into_rep().unwrap_err().to_string();
        assert!(err.contains("commutator"), "{err}");
    }
}
