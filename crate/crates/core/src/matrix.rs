//! Dense matrices over a [`FieldSpec`] and the echelon-form kernel.
//!
//! Matrices act on column vectors: the image of the `j`-th basis vector of
//! the source is column `j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            write!(f, "\n  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: field.zeros(rows * cols),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend(r);
        }
        Matrix { field, rows: n, cols, entries }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = self.field.zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Matrix { entries, ..self.clone() }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix { entries, ..self.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        Matrix { entries, ..self.clone() }
    }

    /// Stacks matrices vertically; all must have the same column count.
    pub fn vstack(field: FieldSpec, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Matrix { field, rows, cols, entries }
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// Kronecker product `self ⊗ rhs`; index `(i, j)` maps to `i * rhs.dim + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.field, self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (r1, r2) = (r / rhs.rows, r % rhs.rows);
            let (c1, c2) = (c / rhs.cols, c % rhs.cols);
            self.get(r1, c1) * rhs.get(r2, c2)
        })
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let pivot_entry = m.entries[row * m.cols + c].clone();
                    if !pivot_entry.is_zero() {
                        m.entries[r * m.cols + c].sub_mul(&factor, &pivot_entry);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            reduced: m,
            rank: row,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Solves `self · x = b`. The returned particular solution has zeros in
    /// every free coordinate.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::dim(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = self.field.zeros(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = self.field.zeros(self.cols);
            v[f] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(row, f);
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis)
    }

    /// Column space, as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, self.columns())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| reduced.get(r, n + c).clone()))
    }
}

/// Free functions on coefficient vectors.
pub mod vector {
    use crate::field::Scalar;

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| x * s).collect()
    }

    /// `acc += s * a`.
    pub fn axpy(acc: &mut [Scalar], s: &Scalar, a: &[Scalar]) {
        if s.is_zero() {
            return;
        }
        for (x, y) in acc.iter_mut().zip(a) {
            if !y.is_zero() {
                x.add_mul(s, y);
            }
        }
    }

    pub fn is_zero(a: &[Scalar]) -> bool {
        a.iter().all(Scalar::is_zero)
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        assert_eq!(a.len(), b.len());
        let mut acc = a.first().map(|x| x.field().zero()).expect("empty dot product");
        for (x, y) in a.iter().zip(b) {
            acc.add_mul(x, y);
        }
        acc
    }

    /// Kronecker product of coefficient vectors.
    pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x * y);
            }
        }
        out
    }
}
