use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
///
/// As a linear operator, column `j` holds the coordinates of the image of the
/// `j`-th basis vector, so `(A * B)(v) = A(B(v))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input and foreign-field entries.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension(format!("ragged row of length {} (expected {cols})", row.len())));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch { expected: field, found: s.field() });
                }
                data.push(s);
            }
        }
        Ok(Matrix { rows: n_rows, cols, field, data })
    }

    /// Integer-literal convenience constructor.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, rows).expect("integer rows are well formed")
    }

    /// A matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, n_rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n_rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Row-major flattening.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_vectorized(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, field, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + &self[(i, i)];
        }
        acc
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Adds `c * rhs` in place.
    pub fn add_scaled(&mut self, c: &Scalar, rhs: &Matrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: FieldSpec, cols: usize, parts: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column count");
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix { rows, cols, field, data }
    }

    /// In-place reduction to reduced row-echelon form; returns the pivot columns.
    /// Zero rows end up at the bottom.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if !self[(r, j)].is_zero() {
                        self[(i, j)] = &self[(i, j)] - &(&factor * &self[(r, j)]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Canonical reduced row-echelon form with zero rows removed.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        m.truncate_rows(pivots.len());
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Null space `{v : self * v = 0}` as a canonical subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(row, free)];
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis).expect("kernel vectors have the ambient length")
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.data.truncate(rows * self.cols);
        self.rows = rows;
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
