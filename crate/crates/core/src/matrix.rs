//! Dense matrices over a commutative ring, with division-free determinants.
//!
//! The jet rings contain zero divisors (ε² = 0), so Gaussian and even
//! fraction-free elimination are unavailable in general. The characteristic
//! polynomial — and from it the determinant and adjugate — is computed by the
//! Berkowitz algorithm, which uses ring operations only. Over [`Rational`] a
//! Bareiss elimination fast path is provided and cross-checked against
//! Berkowitz in the test suite.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

/// Dense row-major matrix. Most operations require a square matrix; the
/// rectangular shape exists for incidence matrices and their column
/// selections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix. Panics on a rectangular one.
    pub fn order(&self) -> usize {
        assert!(self.is_square(), "order of a non-square matrix");
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| f(e)).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|e| s.clone() * e.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + other.get(i, j).clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert!(self.cols == other.rows, "shape mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.order() {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Copy without row `r` (0-based).
    pub fn delete_row(&self, r: usize) -> Self {
        assert!(r < self.rows, "row out of bounds");
        Self::from_fn(self.rows - 1, self.cols, |i, j| {
            self.get(if i < r { i } else { i + 1 }, j).clone()
        })
    }

    /// Copy keeping only the given columns, in the given order (0-based).
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        assert!(cols.iter().all(|&c| c < self.cols), "column out of bounds");
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Copy without row `i` and column `j` (1-based), for cofactor work.
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        let n = self.order();
        if n == 0 || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { i, j, order: n });
        }
        let (i, j) = (i - 1, j - 1);
        Ok(Self::from_fn(n - 1, n - 1, |r, c| {
            self.get(if r < i { r } else { r + 1 }, if c < j { c } else { c + 1 }).clone()
        }))
    }

    /// Characteristic polynomial of `det(xI − M)` by the Berkowitz algorithm,
    /// division-free. Returns coefficients ascending: index `k` holds the
    /// coefficient of `x^k`, so the result has length n+1 and ends with 1.
    pub fn charpoly(&self) -> Vec<R> {
        let n = self.order();
        let mut descending = berkowitz_descending(self, 0, n);
        descending.reverse();
        descending
    }

    /// Determinant via Berkowitz: `(−1)^n · c_0`.
    pub fn det(&self) -> R {
        let n = self.order();
        let c0 = self.charpoly().swap_remove(0);
        if n % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Adjugate, division-free from the characteristic polynomial:
    /// `adj(M) = (−1)^{n−1}(M^{n−1} + c_{n−1}M^{n−2} + … + c_1·I)`.
    /// Satisfies `M · adj(M) = det(M) · I`. Requires order ≥ 1.
    pub fn adjugate(&self) -> Self {
        let n = self.order();
        assert!(n >= 1, "adjugate of the empty matrix");
        let c = self.charpoly();
        // Horner in M: acc = c_n·I, then acc ← acc·M + c_k·I for k = n−1 … 1.
        let mut acc = Self::identity(n);
        for k in (1..n).rev() {
            acc = acc.matmul(self);
            for i in 0..n {
                let d = acc.get(i, i).clone() + c[k].clone();
                acc.set(i, i, d);
            }
        }
        if n % 2 == 0 {
            acc.map(|e| -e.clone())
        } else {
            acc
        }
    }

    /// Signed cofactor `(−1)^{i+j} · det(minor)`, indices 1-based, computed by
    /// explicit minor deletion (independent of the adjugate path).
    pub fn cofactor(&self, i: usize, j: usize) -> Result<R> {
        let d = self.minor(i, j)?.det();
        Ok(if (i + j) % 2 == 0 { d } else { -d })
    }
}

/// Berkowitz on the trailing principal submatrix of `m` starting at
/// `(k, k)`, of the given order. Returns coefficients of det(xI − M) in
/// descending order of power, length order+1, leading 1.
fn berkowitz_descending<R: Ring>(m: &Matrix<R>, k: usize, order: usize) -> Vec<R> {
    if order == 0 {
        return vec![R::one()];
    }
    // Split the submatrix as [[a, row], [col, inner]] and recurse on inner.
    let p = berkowitz_descending(m, k + 1, order - 1);
    // Toeplitz column: t_0 = 1, t_1 = −a, t_s = −(row · inner^{s−2} · col).
    let mut t = Vec::with_capacity(order + 1);
    t.push(R::one());
    t.push(-m.get(k, k).clone());
    let inner = order - 1;
    let mut v: Vec<R> = (0..inner).map(|i| m.get(k + 1 + i, k).clone()).collect();
    for _ in 2..=order {
        let mut dot = R::zero();
        for (j, vj) in v.iter().enumerate() {
            dot = dot + m.get(k, k + 1 + j).clone() * vj.clone();
        }
        t.push(-dot);
        let mut next = Vec::with_capacity(inner);
        for i in 0..inner {
            let mut acc = R::zero();
            for (j, vj) in v.iter().enumerate() {
                acc = acc + m.get(k + 1 + i, k + 1 + j).clone() * vj.clone();
            }
            next.push(acc);
        }
        v = next;
    }
    // q = T · p with T lower-triangular Toeplitz from t.
    let mut q = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut acc = R::zero();
        for (j, pj) in p.iter().enumerate().take(i + 1) {
            acc = acc + t[i - j].clone() * pj.clone();
        }
        q.push(acc);
    }
    q
}

impl Matrix<Rational> {
    /// Determinant by Bareiss fraction-free elimination with row pivoting.
    /// Rational-only fast path; must agree exactly with [`Matrix::det`].
    pub fn det_bareiss(&self) -> Rational {
        let n = self.order();
        if n == 0 {
            return Rational::one();
        }
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev = Rational::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }
}
