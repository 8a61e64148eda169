use crate::error::{Error, Result};
use crate::matrix::{Matrix, C64};

use super::{Tolerances, MAX_SWEEPS};

#[derive(Debug, Clone)]
pub struct HermitianEig {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose k-th column is the eigenvector for `values[k]`.
    pub vectors: Matrix,
}

impl HermitianEig {
    pub fn reconstruct(&self) -> Matrix {
        let d: Vec<C64> = self.values.iter().map(|&x| C64::new(x, 0.0)).collect();
        let q = &self.vectors;
        &(q * &Matrix::from_diag(&d)) * &q.adjoint()
    }
}

pub fn hermitian_eig(h: &Matrix) -> Result<HermitianEig> {
    hermitian_eig_with(h, &Tolerances::default())
}

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
pub fn hermitian_eig_with(h: &Matrix, tol: &Tolerances) -> Result<HermitianEig> {
    let n = h.ensure_square()?;
    let scale = h.frobenius_norm();
    let defect = h.hermitian_defect();
    if defect > tol.algebraic * scale {
        return Err(Error::NotHermitian {
            asymmetry: defect / scale,
        });
    }

    let mut a = h.hermitian_part();
    let mut q = Matrix::identity(n);
    let target = f64::EPSILON * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for r in p + 1..n {
                rotate(&mut a, &mut q, p, r);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > target {
        return Err(Error::NoConvergence {
            routine: "hermitian_eig",
            sweeps: MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let columns: Vec<Vec<C64>> = order.iter().map(|&i| q.col(i)).collect();
    Ok(HermitianEig {
        values,
        vectors: Matrix::from_columns(n, &columns),
    })
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p, q]` with a unitary plane rotation `J = D·R`, where `D`
/// removes the phase of `a[p, q]` and `R` is the real Jacobi rotation.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let d = apq.norm();
    if d < f64::MIN_POSITIVE {
        return;
    }
    let phase = apq / d;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * d);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.rows();
    for i in 0..n {
        let (xp, xq) = (a[(i, p)], a[(i, q)]);
        a[(i, p)] = xp * c + xq * jqp;
        a[(i, q)] = xp * s + xq * jqq;
        let (yp, yq) = (v[(i, p)], v[(i, q)]);
        v[(i, p)] = yp * c + yq * jqp;
        v[(i, q)] = yp * s + yq * jqq;
    }
    for j in 0..n {
        let (xp, xq) = (a[(p, j)], a[(q, j)]);
        a[(p, j)] = xp * c + xq * jqp.conj();
        a[(q, j)] = xp * s + xq * jqq.conj();
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(app - t * d, 0.0);
    a[(q, q)] = C64::new(aqq + t * d, 0.0);
}
