//! Dense exact matrices and Gaussian elimination.
//!
//! Sizes in this crate stay small, so everything is plain row reduction over
//! [`Scalar`]s. Vectors are `Vec<Scalar>` columns.

use std::fmt;

use crate::field::{FieldSpec, Scalar};

/// Sparse coefficient list `(index, coefficient)`, sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c * x`
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

pub fn scale(c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|xi| c * xi).collect()
}

pub fn add_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn to_dense(field: FieldSpec, n: usize, s: &SparseVec) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    for (i, c) in s {
        v[*i] += c;
    }
    v
}

/// Normalizes a coefficient list: merges duplicates, drops zeros, sorts.
pub fn normalize_sparse(mut s: SparseVec) -> SparseVec {
    s.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(s.len());
    for (i, c) in s {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

/// Output of row reduction.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
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

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Scalar]) {
        for (r, x) in v.iter().enumerate() {
            self[(r, c)] = x.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = zero_vec(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| &self[(r, c)] + &other[(r, c)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| &self[(r, c)] - &other[(r, c)])
    }

    pub fn scaled(&self, s: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| s * x).collect() }
    }

    /// Reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let x = &m[(row, c)] * &inv;
                m[(row, c)] = x;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let x = &m[(r, c)] - &(&factor * &m[(row, c)]);
                    m[(r, c)] = x;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the null space, one vector per free column (the free
    /// variable set to 1, the other free variables to 0).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let Echelon { reduced, pivots } = self.echelon();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = zero_vec(self.field, self.cols);
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&reduced[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Linearly independent columns chosen greedily from left to right.
    pub fn column_space(&self) -> Vec<Vec<Scalar>> {
        self.echelon().pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Some solution of `self * x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.field, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = self.field.one();
        }
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| reduced[(r, n + c)].clone()))
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    field: FieldSpec,
    basis: Vec<Vec<Scalar>>,
    ambient: usize,
    /// Row indices where the basis matrix restricted to those rows is invertible.
    rows: Vec<usize>,
    inverse: Matrix,
}

impl Coordinatizer {
    /// Returns `None` if the vectors are linearly dependent.
    pub fn new(field: FieldSpec, ambient: usize, basis: Vec<Vec<Scalar>>) -> Option<Self> {
        let k = basis.len();
        let m = Matrix::from_columns(field, ambient, &basis);
        let pivots = m.transpose().echelon().pivots;
        if pivots.len() < k {
            return None;
        }
        let square = Matrix::from_fn(field, k, k, |r, c| m[(pivots[r], c)].clone());
        let inverse = square.inverse()?;
        Some(Coordinatizer { field, basis, ambient, rows: pivots, inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let restricted: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.apply(&restricted);
        (self.combine(&c) == v).then_some(c)
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, b);
        }
        out
    }
}
