//! Dense matrices with exact elimination: fraction-free (Bareiss)
//! determinants, Smith normal form over Z, and rational linear solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Div, Mul, Neg, Sub};

use crate::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T: Zero + Clone> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

impl<T: Zero + One + Clone> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Zero + One + Clone + PartialEq + Mul<Output = T> + Sub<Output = T> + Div<Output = T> + Neg<Output = T>,
{
    /// Determinant by Bareiss fraction-free elimination. Every division is
    /// exact in the coefficient domain, so integer matrices stay integer.
    pub fn det_bareiss(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.data.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(idx(k, c), idx(r, c));
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[idx(i, j)].clone() * a[idx(k, k)].clone()
                        - a[idx(i, k)].clone() * a[idx(k, j)].clone();
                    a[idx(i, j)] = num / prev.clone();
                }
                a[idx(i, k)] = T::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let det = a[idx(n - 1, n - 1)].clone();
        Ok(if sign_flip { -det } else { det })
    }
}

impl Matrix<BigInt> {
    pub fn to_rational(&self) -> Matrix<BigRational> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        }
    }

    /// Elementary divisors d_1 | d_2 | ... | d_n of a square integer matrix
    /// (Smith normal form diagonal, nonnegative). Zero divisors appear last
    /// when the matrix is singular.
    pub fn smith_elementary_divisors(&self) -> Result<Vec<BigInt>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut divisors = Vec::with_capacity(n);

        for t in 0..n {
            // Find the nonzero entry of smallest absolute value in the
            // trailing submatrix and move it to the pivot position.
            'reduce: loop {
                let mut pivot: Option<(usize, usize)> = None;
                for r in t..n {
                    for c in t..n {
                        if !a[idx(r, c)].is_zero()
                            && pivot.map_or(true, |(pr, pc)| {
                                a[idx(r, c)].abs() < a[idx(pr, pc)].abs()
                            })
                        {
                            pivot = Some((r, c));
                        }
                    }
                }
                let (pr, pc) = match pivot {
                    Some(p) => p,
                    None => {
                        // trailing block is zero
                        for _ in t..n {
                            divisors.push(BigInt::zero());
                        }
                        return Ok(divisors);
                    }
                };
                if pr != t {
                    for c in 0..n {
                        a.swap(idx(t, c), idx(pr, c));
                    }
                }
                if pc != t {
                    for r in 0..n {
                        a.swap(idx(r, t), idx(r, pc));
                    }
                }

                // Clear the pivot row and column by Euclidean steps.
                let mut dirty = false;
                for r in t + 1..n {
                    if !a[idx(r, t)].is_zero() {
                        let q = a[idx(r, t)].div_euclid(&a[idx(t, t)]);
                        for c in t..n {
                            let v = &a[idx(r, c)] - &q * &a[idx(t, c)];
                            a[idx(r, c)] = v;
                        }
                        if !a[idx(r, t)].is_zero() {
                            dirty = true;
                        }
                    }
                }
                for c in t + 1..n {
                    if !a[idx(t, c)].is_zero() {
                        let q = a[idx(t, c)].div_euclid(&a[idx(t, t)]);
                        for r in t..n {
                            let v = &a[idx(r, c)] - &q * &a[idx(r, t)];
                            a[idx(r, c)] = v;
                        }
                        if !a[idx(t, c)].is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue 'reduce;
                }

                // Pivot must divide every remaining entry; if not, fold the
                // offending row in and reduce again.
                let p = a[idx(t, t)].clone();
                let mut offender = None;
                'scan: for r in t + 1..n {
                    for c in t + 1..n {
                        if !(&a[idx(r, c)] % &p).is_zero() {
                            offender = Some(r);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(r) => {
                        for c in t..n {
                            let v = &a[idx(t, c)] + &a[idx(r, c)];
                            a[idx(t, c)] = v;
                        }
                    }
                    None => break 'reduce,
                }
            }
            divisors.push(a[idx(t, t)].abs());
        }
        Ok(divisors)
    }
}

impl Matrix<BigRational> {
    /// Solve `A x = b` by Gaussian elimination over Q.
    /// Returns `None` when `A` is singular.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut rhs = b.to_vec();
        let idx = |r: usize, c: usize| r * n + c;
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| !a[idx(r, k)].is_zero())?;
            if pivot_row != k {
                for c in 0..n {
                    a.swap(idx(k, c), idx(pivot_row, c));
                }
                rhs.swap(k, pivot_row);
            }
            let pivot = a[idx(k, k)].clone();
            for i in k + 1..n {
                if a[idx(i, k)].is_zero() {
                    continue;
                }
                let factor = &a[idx(i, k)] / &pivot;
                for c in k..n {
                    let v = &a[idx(i, c)] - &factor * &a[idx(k, c)];
                    a[idx(i, c)] = v;
                }
                let v = &rhs[i] - &factor * &rhs[k];
                rhs[i] = v;
            }
        }
        let mut x = vec![BigRational::zero(); n];
        for k in (0..n).rev() {
            let mut acc = rhs[k].clone();
            for c in k + 1..n {
                acc -= &a[idx(k, c)] * &x[c];
            }
            x[k] = acc / &a[idx(k, k)];
        }
        Some(x)
    }
}

// BigInt lacks div_euclid as a method name; provide via a tiny extension.
trait DivEuclid {
    fn div_euclid(&self, rhs: &Self) -> Self;
}

impl DivEuclid for BigInt {
    fn div_euclid(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        if r.is_negative() {
            if rhs.is_positive() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        }
    }
}
