//! Trace-class, Hilbert–Schmidt and nuclear operators on finite-dimensional
//! complex Hilbert spaces, computed with dense linear algebra.
//!
//! * [`kernel`]: Hermitian eigendecomposition, SVD, PSD square roots, polar
//!   decomposition.
//! * [`schatten`]: trace, Schatten norms, Hilbert–Schmidt factorization,
//!   spectral truncation and trace duality.
//! * [`tensor`] and [`nuclear`]: tensor elements with their projective and
//!   injective crossnorms, nuclear representations and their costs.
//! * [`verifier`]: a seeded property suite over random-matrix ensembles.

pub mod ensemble;
pub mod error;
pub mod kernel;
pub mod matrix;
pub mod nuclear;
pub mod schatten;
pub mod spectrum;
pub mod tensor;
pub mod verifier;

pub use error::{Error, Result};
pub use kernel::{
    abs_op, hermitian_eig, operator_norm, polar, sqrt_psd, svd, HermitianEig, PolarFactors,
    SvdFactors, Tolerances,
};
pub use matrix::{Matrix, C64};
pub use nuclear::{
    adjoint_rep, compose_rep, k_map, nuclear_apply, nuclear_norm, optimal_rep, rep_cost,
    NuclearRep, NuclearTerm,
};
pub use schatten::{
    basis_trace_sums, dual_attainment, factor_hs, hs_inner, hs_norm, schatten_norm, shift_matrix,
    trace, trace_norm, truncate_spectral, BasisSums, DualAttainment, HsFactors,
};
pub use tensor::{
    bilinearize, coeff_matrix, injective_norm, linearize, mix_representation, projective_norm,
    BilinearForm, BilinearMap, TensorElement, TensorPair,
};
pub use verifier::{
    density_report, run_suite, shift_report, DensityStep, PropertyRecord, ShiftReport, SuiteConfig,
    VerificationReport,
};
