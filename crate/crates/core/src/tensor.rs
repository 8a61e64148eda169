//! Elements of the algebraic tensor product `Cⁿ ⊗ Cᵐ`, their crossnorms and
//! bilinear forms.
//!
//! Coordinates here are bilinear: `x ⊗ y` has coefficient matrix `x·yᵀ`, with
//! no conjugation. Conjugation enters only where a vector stands for a
//! functional through the inner product (see [`crate::nuclear`]).

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{inverse, svd};
use crate::matrix::{self, Matrix, C64, ZERO};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TensorPair {
    pub x: Vec<C64>,
    pub y: Vec<C64>,
}

/// `Σᵢ xᵢ ⊗ yᵢ`, stored as one of its (many) representations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTensor")]
pub struct TensorElement {
    dim_x: usize,
    dim_y: usize,
    pairs: Vec<TensorPair>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTensor {
    dim_x: usize,
    dim_y: usize,
    #[serde(default)]
    pairs: Vec<TensorPair>,
}

impl TryFrom<RawTensor> for TensorElement {
    type Error = Error;

    fn try_from(raw: RawTensor) -> Result<Self> {
        let mut f = TensorElement::zero_checked(raw.dim_x, raw.dim_y)?;
        for p in raw.pairs {
            f.push(p.x, p.y)?;
        }
        Ok(f)
    }
}

impl TensorElement {
    fn zero_checked(dim_x: usize, dim_y: usize) -> Result<Self> {
        if dim_x == 0 || dim_y == 0 {
            return Err(Error::Empty);
        }
        Ok(TensorElement {
            dim_x,
            dim_y,
            pairs: Vec::new(),
        })
    }

    /// The zero element (no pairs). Panics on zero dimensions.
    pub fn zero(dim_x: usize, dim_y: usize) -> Self {
        Self::zero_checked(dim_x, dim_y).expect("tensor dimensions must be positive")
    }

    /// The single tensor `x ⊗ y`.
    pub fn single(x: Vec<C64>, y: Vec<C64>) -> Result<Self> {
        let mut f = Self::zero_checked(x.len(), y.len())?;
        f.push(x, y)?;
        Ok(f)
    }

    pub fn push(&mut self, x: Vec<C64>, y: Vec<C64>) -> Result<()> {
        if x.len() != self.dim_x || y.len() != self.dim_y {
            return Err(Error::DimensionMismatch(format!(
                "pair has dimensions ({}, {}), element expects ({}, {})",
                x.len(),
                y.len(),
                self.dim_x,
                self.dim_y
            )));
        }
        matrix::ensure_finite("x", &x)?;
        matrix::ensure_finite("y", &y)?;
        self.pairs.push(TensorPair { x, y });
        Ok(())
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn dim_y(&self) -> usize {
        self.dim_y
    }

    pub fn pairs(&self) -> &[TensorPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `Σᵢ ‖xᵢ‖‖yᵢ‖` for this particular representation.
    pub fn representation_cost(&self) -> f64 {
        self.pairs
            .iter()
            .map(|p| matrix::norm(&p.x) * matrix::norm(&p.y))
            .sum()
    }

    /// Appends zero pairs until the representation has `r` pairs.
    pub fn padded(&self, r: usize) -> TensorElement {
        let mut f = self.clone();
        while f.pairs.len() < r {
            f.pairs.push(TensorPair {
                x: vec![ZERO; self.dim_x],
                y: vec![ZERO; self.dim_y],
            });
        }
        f
    }

    pub fn concat(&self, other: &TensorElement) -> Result<TensorElement> {
        if (self.dim_x, self.dim_y) != (other.dim_x, other.dim_y) {
            return Err(Error::DimensionMismatch("tensor spaces differ".into()));
        }
        let mut f = self.clone();
        f.pairs.extend(other.pairs.iter().cloned());
        Ok(f)
    }
}

/// Canonical coordinates `M[j,k] = Σᵢ xᵢ[j]·yᵢ[k]`, independent of the
/// representation.
pub fn coeff_matrix(f: &TensorElement) -> Matrix {
    let mut m = Matrix::zeros(f.dim_x, f.dim_y);
    for p in &f.pairs {
        for (j, xj) in p.x.iter().enumerate() {
            for (k, yk) in p.y.iter().enumerate() {
                m[(j, k)] += xj * yk;
            }
        }
    }
    m
}

/// Projective norm `inf Σᵢ ‖xᵢ‖‖yᵢ‖`. For Hilbert spaces the infimum is the
/// trace norm of the coefficient matrix and is attained by its SVD.
pub fn projective_norm(f: &TensorElement) -> Result<f64> {
    Ok(svd(&coeff_matrix(f))?.singular_values.iter().sum())
}

/// Injective norm `sup |Σᵢ g(xᵢ)h(yᵢ)|` over unit functionals, i.e. the
/// largest singular value of the coefficient matrix.
pub fn injective_norm(f: &TensorElement) -> Result<f64> {
    Ok(svd(&coeff_matrix(f))?.max())
}

/// An optimal representation `Σ_k (σ_k u_k) ⊗ conj(v_k)` of the element,
/// whose cost equals the projective norm.
pub fn optimal_representation(f: &TensorElement) -> Result<TensorElement> {
    let s = svd(&coeff_matrix(f))?;
    let cut = crate::kernel::Tolerances::default().rank * s.max();
    let mut out = TensorElement::zero(f.dim_x, f.dim_y);
    for (k, &sigma) in s.singular_values.iter().enumerate() {
        if sigma <= cut || sigma == 0.0 {
            continue;
        }
        let x = s.u.col(k).into_iter().map(|z| z * sigma).collect();
        let y = s.v.col(k).into_iter().map(|z| z.conj()).collect();
        out.push(x, y)?;
    }
    Ok(out)
}

/// Re-expresses the same element through an invertible `r×r` mixing matrix:
/// `x′_j = Σ_k G[j,k] x_k`, `y′_j = Σ_k G⁻ᵀ[j,k] y_k`. The element is padded
/// with zero pairs up to `r` first.
pub fn mix_representation(f: &TensorElement, g: &Matrix) -> Result<TensorElement> {
    let r = g.ensure_square()?;
    if r < f.len() {
        return Err(Error::DimensionMismatch(format!(
            "mixing matrix is {r}x{r} but the element has {} pairs",
            f.len()
        )));
    }
    let g_inv_t = inverse(g).ok_or(Error::SingularMix)?.transpose();
    let padded = f.padded(r);
    let mut out = TensorElement::zero(f.dim_x, f.dim_y);
    for j in 0..r {
        let mut x = vec![ZERO; f.dim_x];
        let mut y = vec![ZERO; f.dim_y];
        for (k, p) in padded.pairs.iter().enumerate() {
            let a = g[(j, k)];
            let b = g_inv_t[(j, k)];
            for (xi, pi) in x.iter_mut().zip(&p.x) {
                *xi += a * pi;
            }
            for (yi, pi) in y.iter_mut().zip(&p.y) {
                *yi += b * pi;
            }
        }
        out.pairs.push(TensorPair { x, y });
    }
    Ok(out)
}

/// Scalar bilinear form `φ(x, y) = xᵀ·M·y` on `Cⁿ × Cᵐ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub coeffs: Matrix,
}

impl BilinearForm {
    pub fn new(coeffs: Matrix) -> Self {
        BilinearForm { coeffs }
    }

    pub fn dim_x(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn dim_y(&self) -> usize {
        self.coeffs.cols()
    }

    pub fn eval(&self, x: &[C64], y: &[C64]) -> C64 {
        matrix::bilinear(x, &self.coeffs.mul_vec(y))
    }

    /// `sup_{‖x‖=‖y‖=1} |φ(x, y)|`, which is `σ_max(M)`.
    pub fn norm(&self) -> Result<f64> {
        Ok(svd(&self.coeffs)?.max())
    }
}

/// The linear functional `Φ` on `Cⁿ ⊗ Cᵐ` with `Φ(x ⊗ y) = φ(x, y)`, given by
/// its matrix under the entrywise pairing `Φ(F) = Σ_{j,k} Φ[j,k]·C(F)[j,k]`.
pub fn linearize(phi: &BilinearForm) -> Matrix {
    phi.coeffs.clone()
}

/// Inverse of [`linearize`]: `φ = Φ ∘ θ` with `θ(x, y) = x ⊗ y`.
pub fn bilinearize(m: &Matrix) -> BilinearForm {
    BilinearForm::new(m.clone())
}

/// Evaluates a linearized form on a tensor element.
pub fn apply_linearized(phi: &Matrix, f: &TensorElement) -> Result<C64> {
    let c = coeff_matrix(f);
    phi.ensure_same_shape(&c)?;
    Ok(phi.data().iter().zip(c.data()).map(|(a, b)| a * b).sum())
}

/// Vector-valued bilinear map `φ(x, y)_l = xᵀ·M_l·y` into `C^L`.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearMap {
    slices: Vec<Matrix>,
}

impl BilinearMap {
    pub fn new(slices: Vec<Matrix>) -> Result<Self> {
        let first = slices
            .first()
            .ok_or_else(|| Error::DimensionMismatch("bilinear map needs an output".into()))?;
        for s in &slices[1..] {
            first.ensure_same_shape(s)?;
        }
        Ok(BilinearMap { slices })
    }

    pub fn output_dim(&self) -> usize {
        self.slices.len()
    }

    pub fn eval(&self, x: &[C64], y: &[C64]) -> Vec<C64> {
        self.slices
            .iter()
            .map(|m| matrix::bilinear(x, &m.mul_vec(y)))
            .collect()
    }

    /// `Φ(F) = Σᵢ φ(xᵢ, yᵢ)`.
    pub fn apply(&self, f: &TensorElement) -> Result<Vec<C64>> {
        self.slices.iter().map(|m| apply_linearized(m, f)).collect()
    }

    /// Lower bound on `sup_{‖x‖=‖y‖=1} ‖φ(x, y)‖` by alternating ascent: with
    /// one argument fixed the problem is a largest-singular-value problem in
    /// the other.
    pub fn norm_lower_bound<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        restarts: usize,
        iterations: usize,
    ) -> Result<f64> {
        let (nx, ny) = self.slices[0].shape();
        let mut best = 0.0f64;
        for _ in 0..restarts {
            let mut x = crate::ensemble::unit_vector(rng, nx);
            let mut value = 0.0;
            for _ in 0..iterations {
                // rows (xᵀ M_l) as functions of y
                let a = Matrix::from_fn(self.output_dim(), ny, |l, k| {
                    (0..nx).map(|j| x[j] * self.slices[l][(j, k)]).sum()
                });
                let fy = svd(&a)?;
                let y = fy.v.col(0);
                // rows (M_l y)ᵀ as functions of x
                let b = Matrix::from_fn(self.output_dim(), nx, |l, j| {
                    (0..ny).map(|k| self.slices[l][(j, k)] * y[k]).sum()
                });
                let fx = svd(&b)?;
                x = fx.v.col(0);
                let next = fx.max();
                let done = next - value <= 1e-15 * next;
                value = next;
                if done {
                    break;
                }
            }
            best = best.max(value);
        }
        Ok(best)
    }
}
