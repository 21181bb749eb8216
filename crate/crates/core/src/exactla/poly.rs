//! Univariate polynomials over ℚ: characteristic polynomials and exact
//! rational-root extraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modular::rational_reconstruction;
use super::RatMatrix;
use crate::error::{Error, Result};
use crate::rational::{self, Q};

/// Dense polynomial, coefficients from the constant term upward, without
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Q>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::new(vec![Q::one()])
    }

    /// `x - c`
    pub fn linear(c: &Q) -> Self {
        QPoly::new(vec![-c.clone(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::q(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = rational::zeros(self.coeffs.len() + other.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_default() - other.coeffs.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &Q) -> Self {
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dd) = d.degree() else {
            return Err(Error::invalid("division by the zero polynomial"));
        };
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if n < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = rational::zeros(n - dd + 1);
        for k in (0..=n - dd).rev() {
            let c = &r[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((QPoly::new(quot), QPoly::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Q::one() / l)),
            None => QPoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("nonzero gcd").0.monic()
    }

    /// Multiplicity of `c` as a root.
    pub fn root_multiplicity(&self, c: &Q) -> usize {
        let lin = QPoly::linear(c);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (qt, r) = p.div_rem(&lin).expect("nonzero divisor");
            if !r.is_zero() {
                break;
            }
            p = qt;
            m += 1;
        }
        m
    }

    /// Primitive integer polynomial with the same roots.
    fn to_primitive_integer(&self) -> Vec<BigInt> {
        let l = rational::denom_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }

    /// All distinct rational roots, in increasing order.
    ///
    /// Roots are located modulo a small prime, lifted ℓ-adically, recovered by
    /// rational reconstruction and confirmed by exact evaluation, so the list
    /// is complete and every entry is certified.
    pub fn rational_roots(&self) -> Vec<Q> {
        let mut roots = Vec::new();
        if self.is_zero() {
            return roots;
        }
        let mut f = self.square_free_part();
        if f.coeffs[0].is_zero() {
            roots.push(Q::zero());
            f = QPoly::new(f.coeffs[1..].to_vec());
        }
        if f.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let g = f.to_primitive_integer();
        let dg: Vec<BigInt> = g.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
        let lc = g.last().expect("nonconstant").abs();
        let c0 = g[0].abs();
        let bound = lc.clone().max(c0);
        let need = &bound * &bound * 2u32 + 1u32;

        let prime = SMALL_PRIMES
            .iter()
            .copied()
            .find(|&l| {
                let lb = BigInt::from(l);
                if (&lc % &lb).is_zero() {
                    return false;
                }
                roots_mod(&g, l).iter().all(|&r| eval_mod(&dg, r, l) != 0)
            })
            .expect("some small prime is good for a square-free polynomial");

        for r in roots_mod(&g, prime) {
            let mut m = BigInt::from(prime);
            let mut x = BigInt::from(r);
            while m < need {
                m = &m * &m;
                let fx = eval_big(&g, &x).mod_floor(&m);
                let dfx = eval_big(&dg, &x).mod_floor(&m);
                let inv = dfx.extended_gcd(&m).x;
                x = (&x - fx * inv).mod_floor(&m);
            }
            if let Some(c) = rational_reconstruction(&x, &m) {
                if f.eval(&c).is_zero() {
                    roots.push(c);
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

const SMALL_PRIMES: [u64; 12] = [
    10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093, 10099, 10103,
];

fn eval_mod(coeffs: &[BigInt], x: u64, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let cs: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue"))
        .collect();
    cs.iter().rev().fold(0u64, |acc, &c| {
        ((acc as u128 * x as u128 + c as u128) % p as u128) as u64
    })
}

fn roots_mod(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let cs: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue"))
        .collect();
    (0..p)
        .filter(|&x| {
            cs.iter().rev().fold(0u64, |acc, &c| {
                ((acc as u128 * x as u128 + c as u128) % p as u128) as u64
            }) == 0
        })
        .collect()
}

fn eval_big(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Characteristic polynomial `det(x·I − m)` via reduction to Hessenberg form.
pub fn charpoly(m: &RatMatrix) -> Result<QPoly> {
    if !m.is_square() {
        return Err(Error::dims("characteristic polynomial of a non-square matrix"));
    }
    let n = m.rows();
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let piv_row = col + 1;
        let Some(p) = (piv_row..n).find(|&i| !h.get(i, col).is_zero()) else {
            continue;
        };
        if p != piv_row {
            h.swap_rows(p, piv_row);
            for i in 0..n {
                let a = h.get(i, p).clone();
                let b = h.get(i, piv_row).clone();
                h.set(i, p, b);
                h.set(i, piv_row, a);
            }
        }
        let piv = h.get(piv_row, col).clone();
        for i in piv_row + 1..n {
            let f = h.get(i, col) / &piv;
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h.get(piv_row, j) * &f;
                *h.get_mut(i, j) -= v;
            }
            for r in 0..n {
                let v = h.get(r, i) * &f;
                *h.get_mut(r, piv_row) += v;
            }
        }
    }

    // p_k = (x − H_kk) p_{k−1} − Σ_{i<k} H_ik (∏_{j=i+1}^{k} H_{j,j−1}) p_{i−1}
    let mut ps: Vec<QPoly> = vec![QPoly::one()];
    for k in 1..=n {
        let hkk = h.get(k - 1, k - 1);
        let mut pk = QPoly::linear(hkk).mul(&ps[k - 1]);
        let mut prod = Q::one();
        for i in (1..k).rev() {
            prod *= h.get(i, i - 1);
            if prod.is_zero() {
                break;
            }
            let c = h.get(i - 1, k - 1) * &prod;
            if !c.is_zero() {
                pk = pk.sub(&ps[i - 1].scale(&c));
            }
        }
        ps.push(pk);
    }
    Ok(ps.pop().expect("n+1 polynomials"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn poly(cs: &[i64]) -> QPoly {
        QPoly::new(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn charpoly_two_by_two() {
        let m = RatMatrix::from_i64(&[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(charpoly(&m).unwrap(), poly(&[3, -4, 1]));
    }

    #[test]
    fn charpoly_agrees_with_determinant_oracle() {
        let m = RatMatrix::from_fn(5, 5, |i, j| {
            qf(((3 * i + 5 * j + i * j) % 7) as i64 - 3, 1 + (i % 2) as i64)
        });
        let p = charpoly(&m).unwrap();
        assert_eq!(p.degree(), Some(5));
        for x in -3..=3 {
            let xm = RatMatrix::scalar(5, &q(x)).sub(&m).unwrap();
            assert_eq!(p.eval(&q(x)), xm.det().unwrap(), "x = {x}");
        }
    }

    #[test]
    fn rational_roots_with_multiplicity_and_irrational_factor() {
        // (x − 1/2)^2 (x + 3) x (x^2 − 2)
        let f = QPoly::linear(&qf(1, 2))
            .mul(&QPoly::linear(&qf(1, 2)))
            .mul(&QPoly::linear(&q(-3)))
            .mul(&QPoly::linear(&q(0)))
            .mul(&poly(&[-2, 0, 1]));
        assert_eq!(f.rational_roots(), vec![q(-3), q(0), qf(1, 2)]);
        assert_eq!(f.root_multiplicity(&qf(1, 2)), 2);
        assert_eq!(f.root_multiplicity(&q(5)), 0);
    }

    #[test]
    fn rational_roots_large_denominators() {
        let f = QPoly::linear(&qf(-1234, 4567)).mul(&QPoly::linear(&qf(98765, 31)));
        assert_eq!(f.rational_roots(), vec![qf(-1234, 4567), qf(98765, 31)]);
    }

    #[test]
    fn no_rational_roots() {
        assert!(poly(&[1, 0, 1]).rational_roots().is_empty());
    }
}
