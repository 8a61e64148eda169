use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, C64, ZERO};

use super::MAX_SWEEPS;

/// Thin singular value decomposition `A = U·diag(σ)·V*`.
///
/// For an `m×n` input with `k = min(m, n)`, `u` is `m×k`, `v` is `n×k` and
/// both have orthonormal columns.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SvdFactors {
    pub u: Matrix,
    pub singular_values: Vec<f64>,
    pub v: Matrix,
}

impl SvdFactors {
    pub fn reconstruct(&self) -> Matrix {
        let mut us = self.u.clone();
        for (j, &s) in self.singular_values.iter().enumerate() {
            for i in 0..us.rows() {
                us[(i, j)] *= s;
            }
        }
        &us * &self.v.adjoint()
    }

    pub fn max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    /// Number of singular values above `rel * σ_max`.
    pub fn rank(&self, rel: f64) -> usize {
        let cut = rel * self.max();
        self.singular_values.iter().filter(|&&s| s > cut).count()
    }
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(a: &Matrix) -> Result<SvdFactors> {
    if a.rows() < a.cols() {
        let t = one_sided_jacobi(&a.adjoint())?;
        return Ok(SvdFactors {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        });
    }
    one_sided_jacobi(a)
}

fn one_sided_jacobi(a: &Matrix) -> Result<SvdFactors> {
    let (m, n) = a.shape();
    let mut w: Vec<Vec<C64>> = (0..n).map(|j| a.col(j)).collect();
    let mut v: Vec<Vec<C64>> = (0..n).map(|j| matrix::basis_vector(n, j)).collect();
    let tol = f64::EPSILON * (m as f64).sqrt();
    // Columns below this norm are rounding noise: they are never rotated and
    // get no singular direction of their own.
    let floor = f64::EPSILON * a.frobenius_norm();

    let mut converged = n == 1;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                rotated |= orthogonalize_pair(&mut w, &mut v, p, q, tol, floor);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NoConvergence {
            routine: "svd",
            sweeps: MAX_SWEEPS,
        });
    }

    let mut sigma: Vec<f64> = w.iter().map(|c| matrix::norm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigma[j].total_cmp(&sigma[i]));
    sigma = order.iter().map(|&i| sigma[i]).collect();
    // Noise columns are replaced by an orthonormal completion, which moves
    // the reconstruction by at most σ_k.
    let negligible = 2.0 * floor;

    let mut u_cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    let mut missing = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        let s = sigma[k];
        if s > negligible && s > 0.0 {
            u_cols.push(w[i].iter().map(|z| z / s).collect());
        } else {
            missing.push(k);
            u_cols.push(vec![ZERO; m]);
        }
    }
    if !missing.is_empty() {
        complete_basis(&mut u_cols, &missing, m);
    }
    let v_cols: Vec<Vec<C64>> = order.iter().map(|&i| v[i].clone()).collect();

    Ok(SvdFactors {
        u: Matrix::from_columns(m, &u_cols),
        singular_values: sigma,
        v: Matrix::from_columns(n, &v_cols),
    })
}

/// Rotates columns `p`, `q` of the working matrix (and of `v`) so that they
/// become orthogonal. Returns whether a rotation was applied.
fn orthogonalize_pair(
    w: &mut [Vec<C64>],
    v: &mut [Vec<C64>],
    p: usize,
    q: usize,
    tol: f64,
    floor: f64,
) -> bool {
    let alpha: f64 = w[p].iter().map(|z| z.norm_sqr()).sum();
    let beta: f64 = w[q].iter().map(|z| z.norm_sqr()).sum();
    if alpha.min(beta) <= floor * floor {
        return false;
    }
    let gamma: C64 = w[p].iter().zip(&w[q]).map(|(a, b)| a.conj() * b).sum();
    let d = gamma.norm();
    if d <= tol * (alpha * beta).sqrt() || d < f64::MIN_POSITIVE {
        return false;
    }
    let phase = (gamma / d).conj();
    let zeta = (beta - alpha) / (2.0 * d);
    let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = c * t;

    for cols in [w, v] {
        let (lo, hi) = cols.split_at_mut(q);
        for (xp, xq) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
            let yq = *xq * phase;
            let yp = *xp;
            *xp = yp * c - yq * s;
            *xq = yp * s + yq * c;
        }
    }
    true
}

/// Fills the columns listed in `missing` with unit vectors orthogonal to all
/// other columns, drawing candidates from the standard basis.
fn complete_basis(cols: &mut [Vec<C64>], missing: &[usize], m: usize) {
    let mut candidate = 0;
    for &k in missing {
        loop {
            assert!(candidate < m, "basis completion exhausted candidates");
            let mut x = matrix::basis_vector(m, candidate);
            candidate += 1;
            for _ in 0..2 {
                for (j, c) in cols.iter().enumerate() {
                    if j == k || matrix::norm(c) == 0.0 {
                        continue;
                    }
                    let proj = matrix::inner(&x, c);
                    for (xi, ci) in x.iter_mut().zip(c) {
                        *xi -= proj * ci;
                    }
                }
            }
            let nx = matrix::norm(&x);
            if nx > 1e-3 {
                cols[k] = x.into_iter().map(|z| z / nx).collect();
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal() {
        let f = svd(&Matrix::from_real_diag(&[3.0, 4.0])).unwrap();
        assert_eq!(f.singular_values, vec![4.0, 3.0]);
    }

    #[test]
    fn nilpotent_shift() {
        let a = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let f = svd(&a).unwrap();
        assert_eq!(f.singular_values, vec![1.0, 0.0]);
        assert!(f.u.orthonormality_defect() < 1e-15);
        assert!(f.v.orthonormality_defect() < 1e-15);
        assert!((&f.reconstruct() - &a).frobenius_norm() < 1e-15);
    }

    #[test]
    fn zero_matrix() {
        let f = svd(&Matrix::zeros(3, 3)).unwrap();
        assert_eq!(f.singular_values, vec![0.0; 3]);
        assert!(f.u.orthonormality_defect() < 1e-15);
        assert_eq!(f.reconstruct(), Matrix::zeros(3, 3));
    }

    #[test]
    fn one_by_one() {
        let f = svd(&Matrix::new(1, 1, vec![C64::new(3.0, -4.0)]).unwrap()).unwrap();
        assert_eq!(f.singular_values, vec![5.0]);
        assert!((f.reconstruct()[(0, 0)] - C64::new(3.0, -4.0)).norm() < 1e-15);
    }

    #[test]
    fn rectangular_shapes() {
        let wide = Matrix::from_fn(2, 4, |i, j| {
            C64::new((i + 2 * j) as f64, (i * j) as f64 - 1.0)
        });
        for a in [wide.clone(), wide.adjoint()] {
            let f = svd(&a).unwrap();
            assert_eq!(f.singular_values.len(), 2);
            assert!((&f.reconstruct() - &a).frobenius_norm() < 1e-13 * a.frobenius_norm());
            assert!(f.u.orthonormality_defect() < 1e-14);
            assert!(f.v.orthonormality_defect() < 1e-14);
        }
    }
}
