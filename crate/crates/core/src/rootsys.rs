//! Root systems of the simple types A–G and the canonical inner product.
//!
//! Simple roots follow Bourbaki numbering. Roots are stored as integer vectors
//! in simple-root coordinates; weights live in fundamental-weight coordinates.
//! The canonical form is normalized so that `⟨α,α⟩ = 1/(ν_α·h∨)` for every
//! root, where `ν_α` is 1 on long roots and the squared-length ratio on short
//! ones.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::rational::{self, q, qf, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A family/rank pair naming a simple type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint = match family {
            Family::A => (rank >= 1).then_some(()).ok_or("type A needs rank >= 1"),
            Family::B => (rank >= 2).then_some(()).ok_or("type B needs rank >= 2"),
            Family::C => (rank >= 2).then_some(()).ok_or("type C needs rank >= 2"),
            Family::D => (rank >= 3).then_some(()).ok_or("type D needs rank >= 3"),
            Family::E => (6..=8)
                .contains(&rank)
                .then_some(())
                .ok_or("type E needs rank 6, 7 or 8"),
            Family::F => (rank == 4).then_some(()).ok_or("type F needs rank 4"),
            Family::G => (rank == 2).then_some(()).ok_or("type G needs rank 2"),
        };
        constraint.map_err(|reason| Error::InvalidType {
            family: family.letter().to_string(),
            rank,
            reason: reason.to_string(),
        })?;
        Ok(RootSystemSpec { family, rank })
    }

    /// Relative squared lengths of the simple roots (shortest = 1).
    fn simple_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }

    /// Dynkin diagram edges (0-based).
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::TypeParse(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::TypeParse(s.to_string()))?;
        RootSystemSpec::new(family, rank)
    }
}

/// Root-system combinatorics for one simple type.
#[derive(Clone, Debug)]
pub struct RootDatum {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    /// Canonical form on the simple roots.
    gram_roots: RatMatrix,
    /// Canonical form on the fundamental weights.
    gram_weights: RatMatrix,
    /// Fundamental weights in simple-root coordinates (rows).
    fund_weights: RatMatrix,
    long: Vec<bool>,
    nu_g: i64,
    h: usize,
    h_check: i64,
    theta: usize,
    theta_short: usize,
}

impl RootDatum {
    /// Builds the root system of an admissible type.
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        let spec = RootSystemSpec::new(spec.family, spec.rank)?;
        let n = spec.rank;
        let lengths = spec.simple_lengths();
        let lmax = *lengths.iter().max().expect("rank >= 1");
        let lmin = *lengths.iter().min().expect("rank >= 1");

        // Unnormalized form: (α_i, α_i) = ℓ_i, edges −max(ℓ_i, ℓ_j)/2.
        let mut raw = RatMatrix::from_fn(n, n, |i, j| if i == j { q(lengths[i]) } else { Q::zero() });
        for (i, j) in spec.edges() {
            let v = qf(-lengths[i].max(lengths[j]), 2);
            raw.set(i, j, v.clone());
            raw.set(j, i, v);
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = raw.get(i, j) * q(2) / raw.get(j, j);
                        rational::to_i64(&c).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect();

        let positives = positive_roots(&cartan);
        let n_pos = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let raw_len = |r: &[i64]| -> Q {
            let v: Vec<Q> = r.iter().map(|&c| q(c)).collect();
            raw.bilinear(&v, &v).expect("rank-sized vector")
        };
        let long: Vec<bool> = roots.iter().map(|r| raw_len(r) == q(lmax)).collect();

        // The highest root is the unique positive root of maximal height and
        // is long; the highest short root is the short root of maximal height.
        let height = |r: &[i64]| r.iter().sum::<i64>();
        let theta = (0..n_pos).max_by_key(|&i| height(&roots[i])).expect("nonempty");
        let theta_short = (0..n_pos)
            .filter(|&i| !long[i] || lmax == lmin)
            .max_by_key(|&i| height(&roots[i]))
            .expect("nonempty");

        let delta: Vec<Q> = (0..n).map(|j| q(positives.iter().map(|r| r[j]).sum::<i64>())).collect();
        let th: Vec<Q> = roots[theta].iter().map(|&c| q(c)).collect();
        let hc = Q::one() + raw.bilinear(&delta, &th)? / raw.bilinear(&th, &th)?;
        let h_check = rational::to_i64(&hc).ok_or_else(|| Error::consistency("non-integral dual Coxeter number"))?;

        let gram_roots = raw.scale(&Q::new(BigInt::one(), BigInt::from(lmax * h_check)));
        let cart_q = RatMatrix::from_fn(n, n, |i, j| q(cartan[i][j]));
        let fund_weights = cart_q
            .inverse()
            .map_err(|_| Error::consistency("singular Cartan matrix"))?;
        let gram_weights = fund_weights.mul(&gram_roots)?.mul(&fund_weights.transpose())?;

        Ok(RootDatum {
            spec,
            cartan,
            h: roots.len() / n,
            roots,
            n_pos,
            index,
            gram_roots,
            gram_weights,
            fund_weights,
            long,
            nu_g: lmax / lmin,
            h_check,
            theta,
            theta_short,
        })
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    /// `cartan[i][j] = 2⟨α_i,α_j⟩/⟨α_j,α_j⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots: positive ones by height, then their negatives in the same order.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    /// Index of `−α_i`.
    pub fn negative(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of the simple root `α_i`.
    pub fn simple(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        self.index[&v]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.long[i]
    }

    /// `ν_α`: 1 for long roots, `ν_G` for short ones.
    pub fn nu(&self, i: usize) -> i64 {
        if self.long[i] {
            1
        } else {
            self.nu_g
        }
    }

    pub fn nu_g(&self) -> i64 {
        self.nu_g
    }

    /// Coxeter number.
    pub fn h(&self) -> usize {
        self.h
    }

    /// Dual Coxeter number.
    pub fn h_check(&self) -> i64 {
        self.h_check
    }

    /// Index of the highest root θ̃.
    pub fn theta(&self) -> usize {
        self.theta
    }

    /// Index of the highest short root (θ̃ itself when simply laced).
    pub fn theta_short(&self) -> usize {
        self.theta_short
    }

    /// Dimension of the Lie algebra: rank + number of roots.
    pub fn dim_g(&self) -> usize {
        self.rank() + self.roots.len()
    }

    /// δ, the sum of the positive roots, in weight coordinates (all 2s).
    pub fn delta(&self) -> Vec<Q> {
        vec![q(2); self.rank()]
    }

    /// Fundamental weights in simple-root coordinates, one per row.
    pub fn fund_weights(&self) -> &RatMatrix {
        &self.fund_weights
    }

    /// Gram matrix of the canonical form on the fundamental weights.
    pub fn canonical_gram(&self) -> &RatMatrix {
        &self.gram_weights
    }

    /// `⟨β, α_i^∨⟩` for `β` in simple-root coordinates.
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan).map(|(b, row)| b * row[i]).sum()
    }

    /// Weight coordinates of a vector given in simple-root coordinates.
    pub fn to_weight(&self, beta: &[i64]) -> Vec<Q> {
        (0..self.rank()).map(|i| q(self.coroot_pairing(beta, i))).collect()
    }

    /// Weight coordinates of root `i`.
    pub fn root_weight(&self, i: usize) -> Vec<Q> {
        self.to_weight(&self.roots[i])
    }

    /// Canonical form on weight coordinates.
    pub fn canonical_form(&self, lambda: &[Q], mu: &[Q]) -> Result<Q> {
        self.gram_weights.bilinear(lambda, mu)
    }

    /// Canonical form between two roots given by index.
    pub fn root_form(&self, a: usize, b: usize) -> Q {
        let x: Vec<Q> = self.roots[a].iter().map(|&c| q(c)).collect();
        let y: Vec<Q> = self.roots[b].iter().map(|&c| q(c)).collect();
        self.gram_roots.bilinear(&x, &y).expect("rank-sized vectors")
    }

    fn check_dominant(&self, lambda: &[Q]) -> Result<()> {
        if lambda.len() != self.rank() {
            return Err(Error::dims(format!(
                "weight has {} coordinates, rank is {}",
                lambda.len(),
                self.rank()
            )));
        }
        if lambda.iter().any(|c| c.is_negative() || !c.is_integer()) {
            return Err(Error::NotDominant(format!(
                "{:?}",
                lambda.iter().map(rational::fmt_q).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    /// `⟨λ, λ+δ⟩`, the eigenvalue of the normalized Casimir on `L(λ)`.
    pub fn casimir_eigenvalue(&self, lambda: &[Q]) -> Result<Q> {
        self.check_dominant(lambda)?;
        let shifted = rational::add_vec(lambda, &self.delta());
        self.canonical_form(lambda, &shifted)
    }

    /// Dimension of `L(λ)` by the Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &[Q]) -> Result<BigInt> {
        self.check_dominant(lambda)?;
        let rho = vec![Q::one(); self.rank()];
        let lr = rational::add_vec(lambda, &rho);
        let mut num = Q::one();
        let mut den = Q::one();
        for i in 0..self.n_pos {
            let a = self.root_weight(i);
            num *= self.canonical_form(&lr, &a)?;
            den *= self.canonical_form(&rho, &a)?;
        }
        let d = num / den;
        if !d.is_integer() {
            return Err(Error::consistency(format!(
                "Weyl dimension {} is not an integer",
                rational::fmt_q(&d)
            )));
        }
        Ok(d.to_integer())
    }
}

/// Positive roots from α-strings, ordered by height and then by decreasing
/// simple-root coordinates (so `α_1` precedes `α_2`).
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let pairing = |b: &[i64], i: usize| -> i64 { b.iter().zip(cartan).map(|(x, row)| x * row[i]).sum() };
    let mut layers: Vec<Vec<Vec<i64>>> = vec![(0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()];
    let mut seen: std::collections::HashSet<Vec<i64>> = layers[0].iter().cloned().collect();
    loop {
        let mut next = Vec::new();
        for beta in layers.last().expect("nonempty") {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let qv = p - pairing(beta, i);
                if qv > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let mut out = Vec::new();
    for mut layer in layers {
        layer.sort_by(|a, b| b.cmp(a));
        out.extend(layer);
    }
    out
}

/// Exceptional-series data: type, dual Coxeter number, Coxeter number, λ (weight
/// coordinates) and `dim L(λ)`.
pub struct SeriesEntry {
    pub spec: RootSystemSpec,
    pub dim_g: usize,
    pub h_check: i64,
    pub h: usize,
    pub lambda: Vec<i64>,
    pub dim_l: usize,
}

pub fn exceptional_series() -> Vec<SeriesEntry> {
    let e = |family, rank, dim_g, h_check, h, lambda: Vec<i64>, dim_l| SeriesEntry {
        spec: RootSystemSpec { family, rank },
        dim_g,
        h_check,
        h,
        lambda,
        dim_l,
    };
    vec![
        e(Family::A, 2, 8, 3, 3, vec![1, 1], 8),
        e(Family::G, 2, 14, 4, 6, vec![2, 0], 27),
        e(Family::F, 4, 52, 9, 12, vec![0, 0, 0, 2], 324),
        e(Family::E, 6, 78, 12, 12, vec![1, 0, 0, 0, 0, 1], 650),
        e(Family::E, 7, 133, 18, 18, vec![0, 0, 0, 0, 0, 1, 0], 1539),
        e(Family::E, 8, 248, 30, 30, vec![1, 0, 0, 0, 0, 0, 0, 0], 3875),
    ]
}

/// Whether the type belongs to the tabulated exceptional series.
pub fn in_exceptional_series(spec: RootSystemSpec) -> bool {
    exceptional_series().iter().any(|t| t.spec == spec)
}
