//! Dense matrices over an exact scalar ring.
//!
//! [`Matrix`] is generic over the scalar; the algorithms that need division
//! or gcds are implemented on the concrete exact aliases ([`IntMatrix`] over
//! `BigInt`, [`RatMatrix`] over `BigRational`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// Row-major dense matrix over the scalar `T`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix with arbitrary-precision integer entries.
pub type IntMatrix = Matrix<BigInt>;
/// Matrix with arbitrary-precision rational entries.
pub type RatMatrix = Matrix<BigRational>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row vectors. All rows must share one length.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<T>
    where
        T: Clone,
    {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} matrix\n{}", self.rows, self.cols, self)
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(vecs, cols).expect("ragged rows")
    }

    pub fn to_rational(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = BigRational::from_integer(self[(r, c)].clone());
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Row-style Hermite normal form: pivots are the first nonzero entry of
    /// each row, pivot columns strictly increase, pivots are positive and the
    /// entries above each pivot are reduced into `[0, pivot)`. Zero rows are
    /// dropped, so the result is the canonical basis of the row lattice.
    pub fn hnf(&self) -> IntMatrix {
        let (h, _) = self.hnf_with_transform();
        h
    }

    /// Hermite normal form together with a unimodular `U` with
    /// `U * self = [H; 0]`. Returns `(H, U, rank)`; rows `rank..` of
    /// `U * self` are zero, so those rows of `U` span the left kernel.
    pub fn hnf_with_transform(&self) -> (IntMatrix, IntMatrix) {
        let mut m = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Euclid on the column entries below pivot_row until at most one
            // nonzero entry remains.
            loop {
                let mut best: Option<usize> = None;
                for r in pivot_row..self.rows {
                    if !m[(r, col)].is_zero() {
                        let better = match best {
                            None => true,
                            Some(b) => m[(r, col)].abs() < m[(b, col)].abs(),
                        };
                        if better {
                            best = Some(r);
                        }
                    }
                }
                let Some(best) = best else { break };
                m.swap_rows(pivot_row, best);
                u.swap_rows(pivot_row, best);
                if m[(pivot_row, col)].is_negative() {
                    negate_row(&mut m, pivot_row);
                    negate_row(&mut u, pivot_row);
                }
                let pivot = m[(pivot_row, col)].clone();
                let mut done = true;
                for r in pivot_row + 1..self.rows {
                    if !m[(r, col)].is_zero() {
                        let q = m[(r, col)].div_floor(&pivot);
                        row_sub_mul(&mut m, r, pivot_row, &q);
                        row_sub_mul(&mut u, r, pivot_row, &q);
                        if !m[(r, col)].is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if !m[(pivot_row, col)].is_zero() {
                let pivot = m[(pivot_row, col)].clone();
                for r in 0..pivot_row {
                    let q = m[(r, col)].div_floor(&pivot);
                    if !q.is_zero() {
                        row_sub_mul(&mut m, r, pivot_row, &q);
                        row_sub_mul(&mut u, r, pivot_row, &q);
                    }
                }
                pivot_row += 1;
            }
        }
        let h_rows: Vec<Vec<BigInt>> = (0..pivot_row).map(|r| m.row(r).to_vec()).collect();
        let h = IntMatrix::from_rows(h_rows, self.cols).unwrap();
        (h, u)
    }

    pub fn rank(&self) -> usize {
        self.hnf().rows()
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        let v = -m[(r, c)].clone();
        m[(r, c)] = v;
    }
}

/// `row[a] -= q * row[b]`
fn row_sub_mul(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for c in 0..m.cols() {
        let v = &m[(a, c)] - q * &m[(b, c)];
        m[(a, c)] = v;
    }
}

impl RatMatrix {
    /// Reduced row echelon form; returns the reduced matrix (zero rows kept
    /// at the bottom) and the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&pr| !m[(pr, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].clone();
            for cc in 0..self.cols {
                let v = &m[(r, cc)] / &inv;
                m[(r, cc)] = v;
            }
            for rr in 0..self.rows {
                if rr != r && !m[(rr, c)].is_zero() {
                    let f = m[(rr, c)].clone();
                    for cc in 0..self.cols {
                        let v = &m[(rr, cc)] - &f * &m[(r, cc)];
                        m[(rr, cc)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }
}
