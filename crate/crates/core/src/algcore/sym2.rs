//! Elements of the symmetric square `Sym²g` in the monomial basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

/// A finite combination of monomials `X_i X_j` (`i ≤ j`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sym2 {
    terms: BTreeMap<(usize, usize), Q>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Sym2 {
    pub fn new() -> Self {
        Sym2::default()
    }

    /// The monomial `X_i X_j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut s = Sym2::new();
        s.terms.insert(key(i, j), Q::one());
        s
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let k = key(i, j);
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Adds `c · (u v)` for vectors `u, v ∈ g`.
    pub fn add_product(&mut self, u: &[Q], v: &[Q], c: &Q) {
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let cu = c * ui;
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    self.add_term(i, j, &(&cu * vj));
                }
            }
        }
    }

    pub fn product(u: &[Q], v: &[Q]) -> Self {
        let mut s = Sym2::new();
        s.add_product(u, v, &Q::one());
        s
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Sym2) {
        for ((i, j), x) in &other.terms {
            self.add_term(*i, *j, &(c * x));
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut s = Sym2::new();
        s.add_scaled(c, self);
        s
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Q)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, i: usize, j: usize) -> Q {
        self.terms.get(&key(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn monomials_are_unordered() {
        assert_eq!(Sym2::monomial(3, 1), Sym2::monomial(1, 3));
    }

    #[test]
    fn product_expands_bilinearly() {
        // (X0 + 2X1)(X0 − X1) = X0² + X0X1 − 2X1²
        let s = Sym2::product(&[q(1), q(2)], &[q(1), q(-1)]);
        assert_eq!(s.coefficient(0, 0), q(1));
        assert_eq!(s.coefficient(0, 1), q(1));
        assert_eq!(s.coefficient(1, 1), q(-2));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut s = Sym2::monomial(0, 2);
        s.add_term(2, 0, &q(-1));
        assert!(s.is_zero());
    }
}
