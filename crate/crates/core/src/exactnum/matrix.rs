use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use super::Scalar;

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Solution set of `m·x = b`: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// `b` is not in the column space of the system matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inconsistent;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::ONE;
        }
        m
    }

    /// Panics unless `entries.len() == rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix entry count mismatch");
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, entries }
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Self {
        Matrix::from_vec(rows, cols, vals.iter().map(|&v| Scalar::int(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::ZERO;
                for (a, b) in self.row(r).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    /// Exact solution set of `self · x = b`.
    pub fn solve_affine(&self, b: &[Scalar]) -> Result<AffineSolution, Inconsistent> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Inconsistent);
        }
        let mut particular = vec![Scalar::ZERO; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            particular[c] = r[(row, self.cols)].clone();
        }
        let kernel = kernel_from_rref(&r, &pivots, self.cols);
        Ok(AffineSolution { particular, kernel })
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::ONE;
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

/// Null-space basis of the first `cols` columns of a reduced matrix.
fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots.iter().filter(|&&c| c < cols) {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::ZERO; cols];
            v[free] = Scalar::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            v
        })
        .collect()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Scalar]> = (0..self.rows).map(|r| self.row(r)).collect();
        f.debug_list().entries(rows).finish()
    }
}
