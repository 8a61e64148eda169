//! Dense complex matrices and vectors.
//!
//! Matrices are stored row-major. The JSON form is
//! `{"rows": n, "cols": m, "data": [[re, im], ...]}`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl TryFrom<RawMatrix> for Matrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        Matrix::new(raw.rows, raw.cols, raw.data)
    }
}

impl Matrix {
    /// Builds a matrix from row-major entries, rejecting empty shapes,
    /// length mismatches and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite {
                field: "data",
                index,
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Real row-major entries. Panics on ragged input; intended for literals.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(n > 0 && m > 0, "empty matrix literal");
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix literal");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| C64::new(x, 0.0)))
            .collect();
        Matrix {
            rows: n,
            cols: m,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        Matrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_real_diag(&vec![1.0; n])
    }

    pub fn from_diag(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diag(&d)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<C64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            m.set_col(j, c);
        }
        m
    }

    /// `y · z*`, the rank-one map `x ↦ ⟨x;z⟩ y`.
    pub fn outer(y: &[C64], z: &[C64]) -> Self {
        Self::from_fn(y.len(), z.len(), |i, j| y[i] * z[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn ensure_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[C64]) {
        assert_eq!(v.len(), self.rows);
        for (i, &x) in v.iter().enumerate() {
            self[(i, j)] = x;
        }
    }

    pub fn diag(&self) -> Vec<C64> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)])
            .collect()
    }

    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        assert_eq!(x.len(), self.cols, "matrix-vector dimension mismatch");
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Dimension-checked product.
    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self * rhs)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖A − A*‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                s += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// `‖A*A − I‖_F`, zero exactly when the columns are orthonormal.
    pub fn orthonormality_defect(&self) -> f64 {
        (&self.adjoint() * self - Matrix::identity(self.cols)).frobenius_norm()
    }

    /// Hermitian part `(A + A*)/2`.
    pub fn hermitian_part(&self) -> Matrix {
        let a = self.adjoint();
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + a[(i, j)]) * 0.5
        })
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.is_finite())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, &a) in row.iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                let src = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

impl Mul<Matrix> for Matrix {
    type Output = Matrix;

    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Add for Matrix {
    type Output = Matrix;

    fn add(self, rhs: Matrix) -> Matrix {
        &self + &rhs
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.shape(),
            rhs.shape(),
            "matrix difference dimension mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Sub for Matrix {
    type Output = Matrix;

    fn sub(self, rhs: Matrix) -> Matrix {
        &self - &rhs
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:>10.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Inner product `⟨x;z⟩ = Σ x[j]·conj(z[j])`, linear in the first slot.
pub fn inner(x: &[C64], z: &[C64]) -> C64 {
    assert_eq!(x.len(), z.len(), "inner product dimension mismatch");
    x.iter().zip(z).map(|(a, b)| a * b.conj()).sum()
}

/// Bilinear pairing `Σ x[j]·y[j]` with no conjugation.
pub fn bilinear(x: &[C64], y: &[C64]) -> C64 {
    assert_eq!(x.len(), y.len(), "pairing dimension mismatch");
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn basis_vector(n: usize, k: usize) -> Vec<C64> {
    let mut e = vec![ZERO; n];
    e[k] = ONE;
    e
}

pub fn real_vector(xs: &[f64]) -> Vec<C64> {
    xs.iter().map(|&x| C64::new(x, 0.0)).collect()
}

pub fn ensure_finite(field: &'static str, x: &[C64]) -> Result<()> {
    match x.iter().position(|z| !z.is_finite()) {
        Some(index) => Err(Error::NonFinite { field, index }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_lossless() {
        let m = Matrix::new(
            1,
            2,
            vec![
                C64::new(0.1, -1.0 / 3.0),
                C64::new(f64::MIN_POSITIVE, 1e300),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.starts_with(r#"{"rows":1,"cols":2,"data":[["#));
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_rejects_bad_shapes() {
        let err = serde_json::from_str::<Matrix>(r#"{"rows":2,"cols":2,"data":[[1,0]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("data"), "{err}");
        let err = serde_json::from_str::<Matrix>(r#"{"rows":0,"cols":2,"data":[]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("at least one row"), "{err}");
        let err = serde_json::from_str::<Matrix>(r#"{"cols":1,"data":[[1,0]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("rows"), "{err}");
    }

    #[test]
    fn rejects_non_finite() {
        let r = Matrix::new(1, 1, vec![C64::new(f64::NAN, 0.0)]);
        assert!(matches!(r, Err(Error::NonFinite { index: 0, .. })));
    }

    #[test]
    fn product_and_adjoint() {
        let a = Matrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let b = Matrix::from_fn(2, 2, |i, j| C64::new(0.0, (i + j) as f64));
        let ab = &a * &b;
        assert_eq!(ab[(0, 1)], C64::new(0.0, 1.0 + 4.0));
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        assert_eq!(lhs, rhs);
        assert!(a.try_mul(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn outer_acts_as_rank_one_map() {
        let y = vec![C64::new(1.0, 1.0), C64::new(0.0, 2.0)];
        let z = vec![C64::new(0.0, 1.0), C64::new(3.0, 0.0)];
        let x = vec![C64::new(2.0, -1.0), C64::new(1.0, 0.5)];
        let lhs = Matrix::outer(&y, &z).mul_vec(&x);
        let c = inner(&x, &z);
        for (l, yy) in lhs.iter().zip(&y) {
            assert!((l - c * yy).norm() < 1e-14);
        }
    }
}
