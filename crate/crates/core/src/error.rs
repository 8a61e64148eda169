use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("data: expected {expected} entries for a {rows}x{cols} matrix, found {found}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },
    #[error("{field}: entry {index} is not finite")]
    NonFinite { field: &'static str, index: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (relative asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },
    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPsd { eigenvalue: f64 },
    #[error("basis matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },
    #[error("{routine} did not converge within {sweeps} sweeps")]
    NoConvergence {
        routine: &'static str,
        sweeps: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("Schatten exponent must be positive, got {0}")]
    InvalidP(f64),
    #[error("truncation rank {k} exceeds dimension {dim}")]
    KOutOfRange { k: usize, dim: usize },
    #[error("mixing matrix is singular")]
    SingularMix,
    #[error("dimension must be at least {min}, got {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
