//! Dense complex linear algebra: Hermitian eigendecomposition, SVD, square
//! roots of PSD matrices and polar decomposition.

mod eig;
mod lu;
mod polar;
mod qr;
mod svd;

pub use eig::{hermitian_eig, hermitian_eig_with, HermitianEig};
pub use lu::{determinant, inverse};
pub(crate) use polar::right_spectral;
pub use polar::{abs_op, operator_norm, polar, polar_with, sqrt_psd, sqrt_psd_with, PolarFactors};
pub use qr::{qr, Qr};
pub use svd::{svd, SvdFactors};

/// Numerical tolerances shared by the kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for structural checks (Hermitian, PSD, unitary).
    pub algebraic: f64,
    /// Singular values at or below `rank * σ_max` are treated as zero.
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            algebraic: 1e-9,
            rank: 1e-10,
        }
    }
}

pub(crate) const MAX_SWEEPS: usize = 80;
