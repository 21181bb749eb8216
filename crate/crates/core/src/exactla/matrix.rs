use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::rational::{self, Q};

/// Dense row-major matrix of exact rationals.
///
/// Entries are `BigRational`, which keeps every value in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dims("ragged rows"));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Q>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::dims("columns of unequal length"));
        }
        Ok(Self::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational::q(x)).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[Q] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).fold(Q::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Q) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Q, other: &Self) -> Result<()> {
        self.check_same_shape(other)?;
        rational::axpy(&mut self.data, c, &other.data);
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if self.cols != v.len() {
            return Err(Error::dims(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| rational::dot(self.row(i), v)).collect())
    }

    /// `vᵀ · self`.
    pub fn vec_mul(&self, v: &[Q]) -> Result<Vec<Q>> {
        if self.rows != v.len() {
            return Err(Error::dims("row vector length"));
        }
        let mut out = rational::zeros(self.cols);
        for (i, c) in v.iter().enumerate() {
            rational::axpy(&mut out, c, self.row(i));
        }
        Ok(out)
    }

    /// `uᵀ · self · v`.
    pub fn bilinear(&self, u: &[Q], v: &[Q]) -> Result<Q> {
        if u.len() != self.rows {
            return Err(Error::dims("left vector length"));
        }
        Ok(rational::dot(u, &self.mul_vec(v)?))
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Jordan product `(self·other + other·self)/2`.
    pub fn jordan(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other)?.add(&other.mul(self)?)?.scale(&rational::qf(1, 2)))
    }

    /// Reduced row-echelon form (sequential).
    pub fn rref(&self) -> Rref {
        self.rref_with(Execution::Sequential)
    }

    /// Reduced row-echelon form.
    ///
    /// Forward elimination is fraction-free (Bareiss) on a row-scaled integer
    /// copy; back substitution runs over the rationals. Pivot rows are chosen
    /// deterministically, so the output is independent of `exec`.
    pub fn rref_with(&self, exec: Execution) -> Rref {
        let (echelon, pivots) = bareiss_forward(self, exec);
        let r = pivots.len();
        let cols = self.cols;
        let mut rows: Vec<Vec<Q>> = echelon
            .into_iter()
            .take(r)
            .zip(&pivots)
            .map(|(row, &pc)| {
                let piv = row[pc].clone();
                row.into_iter().map(|x| Q::new(x, piv.clone())).collect()
            })
            .collect();

        for k in (0..r).rev() {
            let pc = pivots[k];
            let (above, rest) = rows.split_at_mut(k);
            let pivot_row = &rest[0];
            par::for_each_mut(exec, above, |row| {
                let f = row[pc].clone();
                if f.is_zero() {
                    return;
                }
                for j in pc..cols {
                    let p = &pivot_row[j];
                    if !p.is_zero() {
                        row[j] -= &f * p;
                    }
                }
            });
        }

        let mut matrix = Self::zeros(self.rows, cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                matrix.set(i, j, x);
            }
        }
        Rref { matrix, pivots }
    }

    pub fn rank(&self) -> usize {
        bareiss_forward(self, Execution::Sequential).1.len()
    }

    pub fn rank_with(&self, exec: Execution) -> usize {
        bareiss_forward(self, exec).1.len()
    }

    /// Basis of the right null space `{x : self·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let rref = self.rref();
        kernel_from_rref(&rref, self.cols)
    }

    /// Some `x` with `self·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Q]) -> Result<Option<Vec<Q>>> {
        if b.len() != self.rows {
            return Err(Error::dims(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let rref = aug.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = rational::zeros(self.cols);
        for (k, &pc) in rref.pivots.iter().enumerate() {
            x[pc] = rref.matrix.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::dims("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Q::one()
            } else {
                Q::zero()
            }
        });
        let rref = aug.rref();
        if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
            return Err(Error::invalid("matrix is singular"));
        }
        Ok(Self::from_fn(n, n, |i, j| rref.matrix.get(i, n + j).clone()))
    }

    pub fn det(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::dims("determinant of a non-square matrix"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return Ok(Q::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                let f = a.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(c, j) * &f;
                    *a.get_mut(i, j) -= v;
                }
            }
        }
        Ok(det)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row-major entries as one long vector.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }
}

/// Kernel basis read off an RREF of a matrix with `cols` columns.
pub fn kernel_from_rref(rref: &Rref, cols: usize) -> Vec<Vec<Q>> {
    let mut is_pivot = vec![false; cols];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = rational::zeros(cols);
            v[f] = Q::one();
            for (k, &pc) in rref.pivots.iter().enumerate() {
                v[pc] = -rref.matrix.get(k, f).clone();
            }
            v
        })
        .collect()
}

/// Indices of the lexicographically first maximal linearly independent
/// subset of `vectors`, in input order.
pub fn independent_subset(vectors: &[Vec<Q>]) -> Result<Vec<usize>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let m = RatMatrix::from_cols(vectors)?;
    Ok(bareiss_forward(&m, Execution::Sequential).1)
}

/// Fraction-free forward elimination. Returns the integer echelon rows (pivot
/// rows first, in pivot order) and the pivot columns.
fn bareiss_forward(m: &RatMatrix, exec: Execution) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = rational::denom_lcm(row);
            row.iter()
                .map(|x| (x * Q::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        // Among candidate rows prefer the sparsest; ties go to the lowest index.
        let pick = (r..a.len())
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| (a[i][c..].iter().filter(|x| !x.is_zero()).count(), i));
        let Some(p) = pick else { continue };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        let prev_ref = &prev;
        par::for_each_mut(exec, rest, |row| {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = &piv * &row[j];
                if !f.is_zero() && !pivot_row[j].is_zero() {
                    v -= &f * &pivot_row[j];
                }
                if !v.is_zero() {
                    debug_assert!((&v % prev_ref).is_zero(), "Bareiss division not exact");
                    v /= prev_ref;
                }
                row[j] = v;
            }
        });
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn m(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = RatMatrix::identity(4);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn zero_matrix_has_no_pivots() {
        let z = RatMatrix::zeros(3, 5);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(z.kernel().len(), 5);
    }

    #[test]
    fn rref_small_example() {
        let a = m(&[vec![2, 4, 1], vec![1, 2, 3], vec![3, 6, 4]]);
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.matrix.row(0), &[q(1), q(2), q(0)]);
        assert_eq!(r.matrix.row(1), &[q(0), q(0), q(1)]);
        assert!(r.matrix.row(2).iter().all(Zero::is_zero));
        let ker = a.kernel();
        assert_eq!(ker, vec![vec![q(-2), q(1), q(0)]]);
    }

    #[test]
    fn independent_subset_first_pivot_rule() {
        let v = vec![q(1), q(2), q(0)];
        let w = vec![q(0), q(1), q(1)];
        let vs = vec![v.clone(), v.iter().map(|x| x * q(2)).collect(), w];
        assert_eq!(independent_subset(&vs).unwrap(), vec![0, 2]);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[vec![2, 1], vec![1, 3]]);
        let x = a.solve(&[q(3), q(5)]).unwrap().unwrap();
        assert_eq!(x, vec![qf(4, 5), qf(7, 5)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(a.det().unwrap(), q(5));
        let sing = m(&[vec![1, 2], vec![2, 4]]);
        assert!(sing.solve(&[q(1), q(0)]).unwrap().is_none());
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn dimension_errors() {
        let a = RatMatrix::zeros(2, 3);
        assert!(a.mul(&RatMatrix::zeros(2, 3)).is_err());
        assert!(a.solve(&[q(1)]).is_err());
        assert!(a.mul_vec(&[q(1)]).is_err());
    }

    #[test]
    fn parallel_rref_matches_sequential() {
        let a = RatMatrix::from_fn(12, 9, |i, j| qf(((i * 7 + j * 3) % 5) as i64 - 2, (j % 3 + 1) as i64));
        assert_eq!(a.rref_with(Execution::Parallel), a.rref_with(Execution::Sequential));
    }
}
