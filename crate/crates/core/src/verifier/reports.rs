use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::matrix::Matrix;
use crate::schatten::{basis_trace_sums, shift_matrix, trace_norm, truncate_spectral};

/// Diagonal versus trace-norm behaviour of the truncated shift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftReport {
    pub n: usize,
    /// `Σ_k |⟨S e_k; e_k⟩|` in the standard basis.
    pub abs_diag_sum: f64,
    pub trace_norm: f64,
    /// `trace_norm / abs_diag_sum`; infinite when the diagonal vanishes.
    #[serde(serialize_with = "finite_or_inf")]
    pub ratio: f64,
}

fn finite_or_inf<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_infinite() {
        s.serialize_str(if *x > 0.0 { "inf" } else { "-inf" })
    } else {
        s.serialize_f64(*x)
    }
}

pub fn shift_report(n: usize) -> Result<ShiftReport> {
    let s = shift_matrix(n)?;
    let sums = basis_trace_sums(&s, &Matrix::identity(n))?;
    let tn = trace_norm(&s)?;
    let ratio = if sums.abs_sum == 0.0 {
        f64::INFINITY
    } else {
        tn / sums.abs_sum
    };
    Ok(ShiftReport {
        n,
        abs_diag_sum: sums.abs_sum,
        trace_norm: tn,
        ratio,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityStep {
    pub k: usize,
    /// `‖T − T_k‖₁` for the rank-`k` spectral truncation `T_k`.
    pub residual: f64,
}

/// Trace-norm distance from `T` to its rank-`k` truncations, `k = 0..=n`.
pub fn density_report(t: &Matrix) -> Result<Vec<DensityStep>> {
    let n = t.ensure_square()?;
    (0..=n)
        .map(|k| {
            let tk = truncate_spectral(t, k)?;
            Ok(DensityStep {
                k,
                residual: trace_norm(&(t - &tk))?,
            })
        })
        .collect()
}
