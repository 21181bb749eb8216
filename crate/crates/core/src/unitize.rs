//! Adjoining a unit: `Unit(V, f)` on `k ⊕ V`, polynomial-identity residuals,
//! the scan over form rescalings `c·f`, and the operator chain `I_0 ⊆ I_1 ⊆ …`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::modular::{self, ModEchelon};
use crate::exactla::RatMatrix;
use crate::par::{self, Execution};
use crate::rational::{self, Q};
use crate::structure::StructureTable;

/// `Unit(V, f)`: a commutative product `·` on `V` together with a symmetric
/// form `f`. Coordinate 0 of the unitized algebra is the adjoined unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitizedAlgebra {
    dot: StructureTable,
    f: RatMatrix,
}

impl UnitizedAlgebra {
    pub fn new(dot: StructureTable, f: RatMatrix) -> Result<Self> {
        if f.rows() != dot.dim() || f.cols() != dot.dim() {
            return Err(Error::dims(format!(
                "form is {}x{}, product space has dimension {}",
                f.rows(),
                f.cols(),
                dot.dim()
            )));
        }
        if !f.is_symmetric() {
            return Err(Error::invalid("the bilinear form must be symmetric"));
        }
        Ok(UnitizedAlgebra { dot, f })
    }

    pub fn dim_v(&self) -> usize {
        self.dot.dim()
    }

    pub fn dot(&self) -> &StructureTable {
        &self.dot
    }

    pub fn form(&self) -> &RatMatrix {
        &self.f
    }

    /// `Unit(V, c·f)`.
    pub fn scale_form(&self, c: &Q) -> Self {
        UnitizedAlgebra {
            dot: self.dot.clone(),
            f: self.f.scale(c),
        }
    }

    /// Multiplication table of `Unit(V, f)` on `k ⊕ V`.
    pub fn table(&self) -> StructureTable {
        self.table_with_mu(&Q::one())
    }

    /// Table of the variant with `(x_0,x_1)(y_0,y_1) = (x_0y_0 + f(x_1,y_1),
    /// x_0y_1 + y_0x_1 + μ·x_1·y_1)`.
    pub fn table_with_mu(&self, mu: &Q) -> StructureTable {
        let n = self.dim_v();
        let mut t = StructureTable::zero(n + 1);
        t.set(0, 0, vec![(0, Q::one())]);
        for b in 0..n {
            t.set(0, b + 1, vec![(b + 1, Q::one())]);
        }
        for a in 0..n {
            for b in a..n {
                let mut v = vec![(0, self.f.get(a, b).clone())];
                v.extend(self.dot.get(a, b).iter().map(|(k, c)| (k + 1, c * mu)));
                t.set(a + 1, b + 1, v);
            }
        }
        t
    }

    /// Product on `k ⊕ V` evaluated directly from the defining formula.
    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let (x0, x1) = (&x[0], &x[1..]);
        let (y0, y1) = (&y[0], &y[1..]);
        let mut out = Vec::with_capacity(x.len());
        out.push(x0 * y0 + self.f.bilinear(x1, y1).expect("dimension of V"));
        let d = self.dot.mul(x1, y1);
        for i in 0..x1.len() {
            out.push(x0 * &y1[i] + y0 * &x1[i] + &d[i]);
        }
        out
    }

    /// The adjoined unit `(1, 0)`.
    pub fn unit(&self) -> Vec<Q> {
        rational::unit_vec(self.dim_v() + 1, 0)
    }
}

/// `Unit(V, f)` as a structure table.
pub fn unitize(dot: &StructureTable, f: &RatMatrix) -> Result<StructureTable> {
    Ok(UnitizedAlgebra::new(dot.clone(), f.clone())?.table())
}

/// `a(a(aa)) − (aa)(aa)`.
pub fn pa1_residual(t: &StructureTable, a: &[Q]) -> Vec<Q> {
    let a2 = t.square(a);
    let a3 = t.mul(a, &a2);
    let a4 = t.mul(a, &a3);
    rational::sub_vec(&a4, &t.square(&a2))
}

/// `x(x²y) − x²(xy)`.
pub fn jordan_residual(t: &StructureTable, x: &[Q], y: &[Q]) -> Vec<Q> {
    let x2 = t.square(x);
    let lhs = t.mul(x, &t.mul(&x2, y));
    let rhs = t.mul(&x2, &t.mul(x, y));
    rational::sub_vec(&lhs, &rhs)
}

/// `f(x·y, z) − f(x, y·z)` for a form on the same space as the table.
pub fn form_assoc_residual(t: &StructureTable, f: &RatMatrix, x: &[Q], y: &[Q], z: &[Q]) -> Q {
    let l = f.bilinear(&t.mul(x, y), z).expect("dimensions");
    let r = f.bilinear(x, &t.mul(y, z)).expect("dimensions");
    l - r
}

/// Seeded pseudo-random element with small integer or half-integer coordinates.
pub fn random_element(rng: &mut ChaCha8Rng, dim: usize, support: Option<usize>) -> Vec<Q> {
    let mut v = rational::zeros(dim);
    let pick = |rng: &mut ChaCha8Rng| -> Q {
        let n: i64 = rng.gen_range(-3..=3);
        let d: i64 = rng.gen_range(1..=2);
        rational::qf(if n == 0 { 1 } else { n }, d)
    };
    match support {
        Some(s) if s < dim => {
            for _ in 0..s {
                let i = rng.gen_range(0..dim);
                v[i] = pick(rng);
            }
        }
        _ => {
            for x in v.iter_mut() {
                *x = pick(rng);
            }
        }
    }
    v
}

/// A nonzero power-associativity residual `a(a(aa)) − (aa)(aa)` together with the element producing it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    /// Sparse coordinates of `a` as `(index, "p/q")`.
    pub element: Vec<(usize, String)>,
    /// Number of nonzero coordinates in the residual.
    pub residual_support: usize,
    /// First nonzero residual coordinate.
    pub residual_sample: (usize, String),
}

impl Witness {
    fn new(a: &[Q], res: &[Q]) -> Self {
        let element = sparse_strings(a);
        let nz = sparse_strings(res);
        Witness {
            element,
            residual_support: nz.len(),
            residual_sample: nz.first().cloned().unwrap_or((0, "0".into())),
        }
    }

    pub fn dense(&self, dim: usize) -> Result<Vec<Q>> {
        let mut v = rational::zeros(dim);
        for (i, s) in &self.element {
            v[*i] = rational::parse_q(s)?;
        }
        Ok(v)
    }
}

fn sparse_strings(v: &[Q]) -> Vec<(usize, String)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, rational::fmt_q(c)))
        .collect()
}

/// Searches for `a` with `a(a(aa)) ≠ (aa)(aa)`: first a deterministic
/// enumeration of elements with coordinates in {−1, 1, 2} on supports of size
/// at most 4 (capped at `enum_cap` elements), then `random` seeded samples.
pub fn find_pa_witness(
    t: &StructureTable,
    skip: &[usize],
    enum_cap: usize,
    random: usize,
    seed: u64,
) -> Option<Witness> {
    let n = t.dim();
    let idx: Vec<usize> = (0..n).filter(|i| !skip.contains(i)).collect();
    let values = [rational::q(1), rational::q(-1), rational::q(2)];
    let mut tried = 0usize;
    for size in 1..=4usize.min(idx.len()) {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            // For a fixed support, vary the coefficient pattern.
            let patterns = values.len().pow(size as u32 - 1);
            for pat in 0..patterns {
                if tried >= enum_cap {
                    break;
                }
                tried += 1;
                let mut a = rational::zeros(n);
                let mut p = pat;
                for (pos, &ci) in comb.iter().enumerate() {
                    a[idx[ci]] = if pos == 0 {
                        Q::one()
                    } else {
                        let v = values[p % values.len()].clone();
                        p /= values.len();
                        v
                    };
                }
                let r = pa1_residual(t, &a);
                if !rational::is_zero_vec(&r) {
                    return Some(Witness::new(&a, &r));
                }
            }
            if tried >= enum_cap || !next_combination(&mut comb, idx.len()) {
                break;
            }
        }
        if tried >= enum_cap {
            break;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let mut a = random_element(&mut rng, n, Some(6));
        for &s in skip {
            a[s] = Q::zero();
        }
        let r = pa1_residual(t, &a);
        if !rational::is_zero_vec(&r) {
            return Some(Witness::new(&a, &r));
        }
    }
    None
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanStatus {
    /// Both hypotheses were confirmed on a sample.
    Confirmed,
    /// Some hypothesis could not be confirmed on the samples.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateResult {
    pub c: String,
    pub eliminated: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    /// `f` not alternating and `v ∧ v²` not identically zero, on samples.
    pub hypotheses: ScanStatus,
    pub samples: usize,
    pub seed: u64,
    pub candidates: Vec<CandidateResult>,
}

impl ScanReport {
    pub fn survivors(&self) -> Vec<&str> {
        self.candidates
            .iter()
            .filter(|c| !c.eliminated)
            .map(|c| c.c.as_str())
            .collect()
    }
}

/// For each candidate `c`, tests `a(a(aa)) = (aa)(aa)` in `Unit(V, c·f)` on `samples` seeded
/// elements `(0, v)`; a candidate survives when every residual vanishes.
pub fn unique_c_scan(u: &UnitizedAlgebra, candidates: &[Q], samples: usize, seed: u64, exec: Execution) -> ScanReport {
    let n = u.dim_v();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems: Vec<Vec<Q>> = (0..samples)
        .map(|i| {
            let support = if i % 2 == 0 { Some(3) } else { None };
            let mut v = vec![Q::zero()];
            v.extend(random_element(&mut rng, n, support));
            v
        })
        .collect();

    let non_alternating = elems
        .iter()
        .any(|v| !u.form().bilinear(&v[1..], &v[1..]).unwrap().is_zero());
    let wedge_nonzero = elems.iter().any(|v| {
        let sq = u.dot().square(&v[1..]);
        RatMatrix::from_rows(vec![v[1..].to_vec(), sq])
            .map(|m| m.rank() == 2)
            .unwrap_or(false)
    });
    let hypotheses = if non_alternating && wedge_nonzero {
        ScanStatus::Confirmed
    } else {
        ScanStatus::Inconclusive
    };

    let results = par::map(exec, candidates, |c| {
        let t = u.scale_form(c).table();
        let witness = elems.iter().find_map(|a| {
            let r = pa1_residual(&t, a);
            (!rational::is_zero_vec(&r)).then(|| Witness::new(a, &r))
        });
        CandidateResult {
            c: rational::fmt_q(c),
            eliminated: witness.is_some(),
            witness,
        }
    });
    ScanReport {
        hypotheses,
        samples,
        seed,
        candidates: results,
    }
}

/// Lower bounds for `dim I_e`, `e = 0..=e_max`, where `I_e` is spanned by
/// `Id` and the symmetrized words `Σ_σ M_{a_σ(1)}⋯M_{a_σ(k)}`, `k ≤ e`, in
/// elements `a_i` from the span of eight seeded generators.
///
/// By polarization the degree-`k` words span the same space as the powers
/// `M_b^k`, so random `b` are drawn until `stall` consecutive draws add
/// nothing. Ranks are taken modulo a large prime.
pub fn ie_chain(t: &StructureTable, e_max: usize, seed: u64, stall: usize) -> Vec<usize> {
    let p = modular::PRIMES[1];
    let n = t.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Vec<u64>> = (0..8)
        .map(|_| {
            let g = random_element(&mut rng, n, None);
            modular::reduce_vec(&g, p).expect("denominators 1 or 2")
        })
        .collect();
    let mats: Vec<Vec<u64>> = gens.iter().map(|g| left_mul_mod(t, g, p)).collect();

    let mut ech = ModEchelon::new(p, n * n);
    let id: Vec<u64> = (0..n * n).map(|i| u64::from(i % (n + 1) == 0)).collect();
    ech.insert(id);
    let mut dims = vec![ech.rank()];
    for e in 1..=e_max {
        let mut misses = 0;
        while misses < stall && !ech.is_full() {
            let coeffs: Vec<u64> = (0..8).map(|_| rng.gen_range(0..p)).collect();
            let mut mb = vec![0u64; n * n];
            for (c, m) in coeffs.iter().zip(&mats) {
                for (x, y) in mb.iter_mut().zip(m) {
                    *x = (*x + mulmod(*c, *y, p)) % p;
                }
            }
            let mut pow = mb.clone();
            for _ in 1..e {
                pow = matmul_mod(&pow, &mb, n, p);
            }
            if ech.insert(pow) {
                misses = 0;
            } else {
                misses += 1;
            }
        }
        dims.push(ech.rank());
    }
    dims
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn left_mul_mod(t: &StructureTable, u: &[u64], p: u64) -> Vec<u64> {
    let n = t.dim();
    let mut m = vec![0u64; n * n];
    for (a, &ua) in u.iter().enumerate() {
        if ua == 0 {
            continue;
        }
        for b in 0..n {
            for (k, c) in t.get(a, b) {
                let cm = modular::reduce(c, p).expect("table denominators prime to p");
                let e = &mut m[k * n + b];
                *e = (*e + mulmod(ua, cm, p)) % p;
            }
        }
    }
    m
}

fn matmul_mod(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    let e = &mut out[i * n + j];
                    *e = (*e + mulmod(x, y, p)) % p;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf, unit_vec};

    /// V = k² with v·w = (v_0 w_0, v_1 w_1) and f = identity.
    fn split_pair() -> UnitizedAlgebra {
        let dot = StructureTable::from_quadruples(2, [(0, 0, 0, q(1)), (1, 1, 1, q(1))]).unwrap();
        UnitizedAlgebra::new(dot, RatMatrix::identity(2)).unwrap()
    }

    #[test]
    fn unit_acts_as_identity() {
        let u = split_pair();
        let t = u.table();
        for b in 0..3 {
            assert_eq!(t.mul(&u.unit(), &unit_vec(3, b)), unit_vec(3, b));
        }
        let v = vec![q(0), q(2), q(-1)];
        let w = vec![q(0), qf(1, 2), q(3)];
        assert_eq!(t.mul(&v, &w), u.mul(&v, &w));
        assert_eq!(t.mul(&v, &w), vec![q(1 - 3), q(1), q(-3)]);
    }

    #[test]
    fn zero_form_makes_v_an_ideal() {
        let t = split_pair().scale_form(&Q::zero()).table();
        for a in 1..3 {
            for b in 0..3 {
                assert!(t.constant(a, b, 0).is_zero());
            }
        }
        assert_eq!(split_pair().scale_form(&Q::one()), split_pair());
    }

    #[test]
    fn rejects_asymmetric_form() {
        let dot = StructureTable::zero(2);
        let f = RatMatrix::from_i64(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(UnitizedAlgebra::new(dot, f).is_err());
    }

    #[test]
    fn mu_variant_is_rescaled_form() {
        // (x0, x1) ↦ (x0, x1/μ) carries Unit(V, μ^{-2} f) onto Unit(V, f, μ).
        let u = split_pair();
        let mu = qf(3, 2);
        let lhs = u.table_with_mu(&mu);
        let rhs = u.scale_form(&(Q::one() / (&mu * &mu))).table();
        let phi = |x: &[Q]| -> Vec<Q> {
            let mut y = x.to_vec();
            for c in y.iter_mut().skip(1) {
                *c /= &mu;
            }
            y
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let x = random_element(&mut rng, 3, None);
            let y = random_element(&mut rng, 3, None);
            assert_eq!(phi(&rhs.mul(&x, &y)), lhs.mul(&phi(&x), &phi(&y)));
        }
    }

    #[test]
    fn associative_algebra_has_zero_residuals() {
        // With f = 0 this is k × k × k.
        let t = split_pair().scale_form(&Q::zero()).table();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_element(&mut rng, 3, None);
            let b = random_element(&mut rng, 3, None);
            assert!(rational::is_zero_vec(&pa1_residual(&t, &a)));
            assert!(rational::is_zero_vec(&jordan_residual(&t, &a, &b)));
        }
    }

    #[test]
    fn zero_product_keeps_every_candidate() {
        let u = UnitizedAlgebra::new(StructureTable::zero(3), RatMatrix::identity(3)).unwrap();
        let cands = [q(0), qf(1, 2), q(1), q(2)];
        let rep = unique_c_scan(&u, &cands, 10, 3, Execution::Sequential);
        assert_eq!(rep.survivors().len(), 4);
        assert_eq!(rep.hypotheses, ScanStatus::Inconclusive);
    }

    #[test]
    fn empty_candidate_list() {
        let rep = unique_c_scan(&split_pair(), &[], 5, 0, Execution::Sequential);
        assert!(rep.candidates.is_empty());
    }

    #[test]
    fn chain_of_associative_algebra() {
        // k × k × k: multiplication operators span the diagonal matrices.
        let t = split_pair().scale_form(&Q::zero()).table();
        let dims = ie_chain(&t, 3, 5, 10);
        assert_eq!(dims[0], 1);
        assert!(dims.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*dims.last().unwrap(), 3);
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![2, 3]);
    }
}
