//! Word-size prime-field linear algebra.
//!
//! A rank computed modulo a prime never exceeds the rank over ℚ, so every
//! number produced here is a certified lower bound. When the bound already
//! equals the ambient dimension it certifies full rank outright.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::RatMatrix;
use crate::rational::Q;

/// Primes used by the multi-modular pre-pass.
pub const PRIMES: [u64; 4] = [2_305_843_009_213_693_951, 1_000_000_007, 998_244_353, 1_000_000_009];

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational in `F_p`, or `None` when `p` divides the denominator.
pub fn reduce(x: &Q, p: u64) -> Option<u64> {
    let d = bigint_mod(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mulmod(bigint_mod(x.numer(), p), invmod(d, p), p))
}

pub fn reduce_vec(v: &[Q], p: u64) -> Option<Vec<u64>> {
    v.iter().map(|x| reduce(x, p)).collect()
}

/// Rank of `m` over `F_p`; `None` if some denominator vanishes mod `p`.
pub fn rank_mod_p(m: &RatMatrix, p: u64) -> Option<usize> {
    let mut ech = ModEchelon::new(p, m.cols());
    for i in 0..m.rows() {
        ech.insert(reduce_vec(m.row(i), p)?);
    }
    Some(ech.rank())
}

/// Largest rank over the default primes: a lower bound for the rational rank
/// that is exact for all but finitely many primes.
pub fn rank_multimodular(m: &RatMatrix) -> usize {
    PRIMES.iter().filter_map(|&p| rank_mod_p(m, p)).max().unwrap_or(0)
}

/// Incrementally maintained row-echelon basis over `F_p`.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    dim: usize,
    /// (pivot column, row normalized so the pivot entry is 1)
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    pub fn new(p: u64, dim: usize) -> Self {
        ModEchelon {
            p,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduces `v` against the basis; keeps it if it is new. Returns whether
    /// the span grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let p = self.p;
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = submod(*x, mulmod(f, *r, p), p);
                    }
                }
            }
        }
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = invmod(v[pc], p);
        for x in v.iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        self.rows.push((pc, v));
        true
    }

    /// Basis vectors currently stored.
    pub fn basis(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

/// Signed representative of `x mod m` in `(-m/2, m/2]`.
pub fn symmetric_residue(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if (&r * 2) > *m {
        r - m
    } else {
        r
    }
}

/// Rational reconstruction: finds `a/b ≡ x (mod m)` with `|a|, b ≤ sqrt(m/2)`.
pub fn rational_reconstruction(x: &BigInt, m: &BigInt) -> Option<Q> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while r1 > bound {
        let qt = &r0 / &r1;
        let r2 = &r0 - &qt * &r1;
        let t2 = &t0 - &qt * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(Q::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn reduction_and_inverse() {
        let p = 1_000_000_007;
        let half = reduce(&qf(1, 2), p).unwrap();
        assert_eq!(mulmod(half, 2, p), 1);
        assert_eq!(reduce(&qf(-1, 1), p).unwrap(), p - 1);
        assert_eq!(reduce(&qf(1, 7), 7), None);
    }

    #[test]
    fn modular_rank_matches_exact_for_small_matrix() {
        let m = RatMatrix::from_fn(6, 5, |i, j| qf(((i * j + i) % 4) as i64 - 1, (i % 2 + 1) as i64));
        assert_eq!(rank_multimodular(&m), m.rank());
    }

    #[test]
    fn bad_prime_lowers_rank() {
        // det = 7, so the rank drops mod 7.
        let m = RatMatrix::from_i64(&[vec![3, 1], vec![1, 5]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(rank_mod_p(&m, 7), Some(1));
    }

    #[test]
    fn reconstruction_recovers_small_fraction() {
        let m = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let target = qf(-355, 113);
        // x = -355 * 113^{-1} mod m
        let x = (BigInt::from(-355) * BigInt::from(113).extended_gcd(&m).x).mod_floor(&m);
        assert_eq!(rational_reconstruction(&x, &m), Some(target));
        assert_eq!(rational_reconstruction(&BigInt::from(5), &m), Some(q(5)));
    }
}
