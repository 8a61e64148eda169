//! Trace, Schatten norms and the trace-class toolkit: Hilbert–Schmidt
//! factorization, spectral truncation and trace-duality attainment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{self, polar, svd, Tolerances};
use crate::matrix::{Matrix, C64, ZERO};

/// Sum of the diagonal entries.
pub fn trace(t: &Matrix) -> Result<C64> {
    t.ensure_square()?;
    Ok(t.diag().into_iter().sum())
}

/// `(Σ σ_k^p)^{1/p}`; pass `f64::INFINITY` for the operator norm.
pub fn schatten_norm(t: &Matrix, p: f64) -> Result<f64> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::InvalidP(p));
    }
    if p == 2.0 {
        return Ok(t.frobenius_norm());
    }
    let s = svd(t)?.singular_values;
    Ok(if p.is_infinite() {
        s[0]
    } else if p == 1.0 {
        s.iter().sum()
    } else {
        s.iter().map(|x| x.powf(p)).sum::<f64>().powf(p.recip())
    })
}

/// `‖T‖₁`, the sum of singular values.
pub fn trace_norm(t: &Matrix) -> Result<f64> {
    schatten_norm(t, 1.0)
}

/// `‖T‖₂ = (Σ_k ‖T e_k‖²)^½`.
pub fn hs_norm(t: &Matrix) -> f64 {
    t.frobenius_norm()
}

/// Hilbert–Schmidt inner product `⟨T;S⟩₂ = tr(S*T)`.
pub fn hs_inner(t: &Matrix, s: &Matrix) -> Result<C64> {
    t.ensure_same_shape(s)?;
    Ok(t.data()
        .iter()
        .zip(s.data())
        .map(|(a, b)| a * b.conj())
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisSums {
    /// `Σ_k ⟨T b_k; b_k⟩`
    pub sum: C64,
    /// `Σ_k |⟨T b_k; b_k⟩|`
    pub abs_sum: f64,
    /// `Σ_k ⟨|T| b_k; b_k⟩`
    pub abs_diag_of_abs: f64,
}

/// Diagonal sums of `T` and `|T|` in the orthonormal basis given by the
/// columns of `basis`.
pub fn basis_trace_sums(t: &Matrix, basis: &Matrix) -> Result<BasisSums> {
    basis_trace_sums_with(t, basis, &Tolerances::default())
}

pub fn basis_trace_sums_with(t: &Matrix, basis: &Matrix, tol: &Tolerances) -> Result<BasisSums> {
    let n = t.ensure_square()?;
    if basis.shape() != (n, n) {
        return Err(Error::DimensionMismatch(format!(
            "basis is {}x{}, operator is {n}x{n}",
            basis.rows(),
            basis.cols()
        )));
    }
    let residual = basis.orthonormality_defect();
    if residual > tol.algebraic * (n as f64).sqrt() {
        return Err(Error::NotUnitary { residual });
    }
    let abs_t = kernel::abs_op(t)?;
    let tb = t * basis;
    let ab = &abs_t * basis;
    let mut out = BasisSums {
        sum: ZERO,
        abs_sum: 0.0,
        abs_diag_of_abs: 0.0,
    };
    for k in 0..n {
        let mut d = ZERO;
        let mut e = ZERO;
        for i in 0..n {
            let b = basis[(i, k)].conj();
            d += tb[(i, k)] * b;
            e += ab[(i, k)] * b;
        }
        out.sum += d;
        out.abs_sum += d.norm();
        out.abs_diag_of_abs += e.re;
    }
    Ok(out)
}

/// Hilbert–Schmidt factors with `A·B = T`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HsFactors {
    pub a: Matrix,
    pub b: Matrix,
}

/// `T = A·B` with `A = W·|T|^½`, `B = |T|^½`; this pair attains
/// `‖A‖₂‖B‖₂ = ‖T‖₁`.
pub fn factor_hs(t: &Matrix) -> Result<HsFactors> {
    t.ensure_square()?;
    let f = svd(t)?;
    let root = kernel::right_spectral(&f, f64::sqrt);
    let w = polar(t)?.w;
    Ok(HsFactors {
        a: &w * &root,
        b: root,
    })
}

/// Best rank-`k` approximation `U·diag(σ₁, …, σ_k, 0, …)·V*`.
pub fn truncate_spectral(t: &Matrix, k: usize) -> Result<Matrix> {
    let n = t.ensure_square()?;
    if k > n {
        return Err(Error::KOutOfRange { k, dim: n });
    }
    if k == n {
        return Ok(t.clone());
    }
    let mut f = svd(t)?;
    for s in f.singular_values.iter_mut().skip(k) {
        *s = 0.0;
    }
    Ok(f.reconstruct())
}

/// A contraction attaining `sup_{‖S‖≤1} |tr(ST)| = ‖T‖₁`.
#[derive(Debug, Clone)]
pub struct DualAttainment {
    pub s: Matrix,
    pub value: f64,
}

/// `S = W*` from the polar decomposition, which vanishes on `range(T)^⊥`.
pub fn dual_attainment(t: &Matrix) -> Result<DualAttainment> {
    let s = polar(t)?.w.adjoint();
    let value = trace(&(&s * t))?.re;
    Ok(DualAttainment { s, value })
}

/// The `n×n` truncation of the unilateral shift: `e_k ↦ e_{k+1}`, `e_n ↦ 0`.
pub fn shift_matrix(n: usize) -> Result<Matrix> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    let mut s = Matrix::zeros(n, n);
    for k in 0..n - 1 {
        s[(k + 1, k)] = C64::new(1.0, 0.0);
    }
    Ok(s)
}
