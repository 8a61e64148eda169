use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, C64};

use super::{hermitian_eig_with, svd, SvdFactors, Tolerances};

/// `T = W·P` with `W` a partial isometry and `P = |T|`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolarFactors {
    pub w: Matrix,
    pub p: Matrix,
}

impl PolarFactors {
    pub fn reconstruct(&self) -> Matrix {
        &self.w * &self.p
    }
}

/// `V·diag(f(σ))·V*` for the right singular vectors of an SVD.
pub(crate) fn right_spectral(f: &SvdFactors, g: impl Fn(f64) -> f64) -> Matrix {
    let v = &f.v;
    let n = v.rows();
    let weights: Vec<f64> = f.singular_values.iter().map(|&s| g(s)).collect();
    Matrix::from_fn(n, n, |i, j| {
        weights
            .iter()
            .enumerate()
            .map(|(k, &w)| v[(i, k)] * v[(j, k)].conj() * w)
            .sum()
    })
}

pub fn sqrt_psd(p: &Matrix) -> Result<Matrix> {
    sqrt_psd_with(p, &Tolerances::default())
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// `[-tol·‖P‖, 0)` are clamped to zero.
pub fn sqrt_psd_with(p: &Matrix, tol: &Tolerances) -> Result<Matrix> {
    let e = hermitian_eig_with(p, tol)?;
    let scale = e.values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let roots: Vec<C64> = e
        .values
        .iter()
        .map(|&l| {
            if l < -tol.algebraic * scale {
                Err(Error::NotPsd { eigenvalue: l })
            } else {
                Ok(C64::new(l.max(0.0).sqrt(), 0.0))
            }
        })
        .collect::<Result<_>>()?;
    let q = &e.vectors;
    Ok(&(q * &Matrix::from_diag(&roots)) * &q.adjoint())
}

/// `|T| = (T*T)^½`, assembled from the SVD as `V·Σ·V*`.
///
/// Going through the SVD instead of squaring keeps small singular values
/// accurate; the result agrees with `sqrt_psd(T*·T)`.
pub fn abs_op(t: &Matrix) -> Result<Matrix> {
    t.ensure_square()?;
    let f = svd(t)?;
    Ok(right_spectral(&f, |s| s))
}

pub fn polar(t: &Matrix) -> Result<PolarFactors> {
    polar_with(t, &Tolerances::default())
}

/// Polar decomposition of a square matrix. `W = U·D·V*` where `D` keeps the
/// singular directions with `σ > rank·σ_max`, so `W*W` projects onto `N(T)^⊥`.
pub fn polar_with(t: &Matrix, tol: &Tolerances) -> Result<PolarFactors> {
    let n = t.ensure_square()?;
    let f = svd(t)?;
    let cut = tol.rank * f.max();
    let mut ud = f.u.clone();
    for (k, &s) in f.singular_values.iter().enumerate() {
        if s <= cut {
            for i in 0..n {
                ud[(i, k)] = C64::new(0.0, 0.0);
            }
        }
    }
    let w = &ud * &f.v.adjoint();
    let p = right_spectral(&f, |s| s);
    Ok(PolarFactors { w, p })
}

/// Largest singular value.
pub fn operator_norm(t: &Matrix) -> Result<f64> {
    Ok(svd(t)?.max())
}
