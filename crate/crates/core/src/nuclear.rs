//! Nuclear representations `Tx = Σ_k ⟨x;z_k⟩ y_k` and the map from tensors
//! of functionals to operators.
//!
//! A functional `f` on `Cⁿ` is held by its Riesz vector `z`, `f(x) = ⟨x;z⟩`.
//! Its bilinear coordinates, as used by [`TensorElement`], are `conj(z)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{svd, Tolerances};
use crate::matrix::{self, Matrix, C64, ZERO};
use crate::schatten;
use crate::tensor::{coeff_matrix, mix_representation, TensorElement};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NuclearTerm {
    pub z: Vec<C64>,
    pub y: Vec<C64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawRep")]
pub struct NuclearRep {
    dim: usize,
    terms: Vec<NuclearTerm>,
}

#[derive(Deserialize)]
struct RawRep {
    dim: usize,
    #[serde(default)]
    terms: Vec<NuclearTerm>,
}

impl TryFrom<RawRep> for NuclearRep {
    type Error = Error;

    fn try_from(raw: RawRep) -> Result<Self> {
        if raw.dim == 0 {
            return Err(Error::Empty);
        }
        let mut r = NuclearRep::empty(raw.dim);
        for t in raw.terms {
            r.push(t.z, t.y)?;
        }
        Ok(r)
    }
}

impl NuclearRep {
    pub fn empty(dim: usize) -> Self {
        assert!(dim > 0, "representation dimension must be positive");
        NuclearRep {
            dim,
            terms: Vec::new(),
        }
    }

    pub fn push(&mut self, z: Vec<C64>, y: Vec<C64>) -> Result<()> {
        if z.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "term has dimensions ({}, {}), representation expects {}",
                z.len(),
                y.len(),
                self.dim
            )));
        }
        matrix::ensure_finite("z", &z)?;
        matrix::ensure_finite("y", &y)?;
        self.terms.push(NuclearTerm { z, y });
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[NuclearTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ_k y_k·z_k*`.
    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for t in &self.terms {
            for (i, yi) in t.y.iter().enumerate() {
                for (j, zj) in t.z.iter().enumerate() {
                    m[(i, j)] += yi * zj.conj();
                }
            }
        }
        m
    }

    /// The same operator as an element of `X*⊗Y` in bilinear coordinates.
    pub fn to_functional_tensor(&self) -> TensorElement {
        let mut f = TensorElement::zero(self.dim, self.dim);
        for t in &self.terms {
            let phi = t.z.iter().map(|z| z.conj()).collect();
            f.push(phi, t.y.clone())
                .expect("term dimensions already checked");
        }
        f
    }

    /// Reads pairs `(φ_k, y_k)` with `f_k(x) = Σ φ_k[j]·x[j]` as terms.
    pub fn from_functional_tensor(f: &TensorElement) -> Result<Self> {
        if f.dim_x() != f.dim_y() {
            return Err(Error::DimensionMismatch(format!(
                "operator representation needs a square tensor space, got {}x{}",
                f.dim_x(),
                f.dim_y()
            )));
        }
        let mut r = NuclearRep::empty(f.dim_x());
        for p in f.pairs() {
            r.push(p.x.iter().map(|z| z.conj()).collect(), p.y.clone())?;
        }
        Ok(r)
    }

    /// Concatenation; represents the sum of the two operators.
    pub fn concat(&self, other: &NuclearRep) -> Result<NuclearRep> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot add representations of dimension {} and {}",
                self.dim, other.dim
            )));
        }
        let mut r = self.clone();
        r.terms.extend(other.terms.iter().cloned());
        Ok(r)
    }
}

/// `Σ_k ⟨x;z_k⟩ y_k`.
pub fn nuclear_apply(rep: &NuclearRep, x: &[C64]) -> Result<Vec<C64>> {
    if x.len() != rep.dim {
        return Err(Error::DimensionMismatch(format!(
            "vector has length {}, representation acts on dimension {}",
            x.len(),
            rep.dim
        )));
    }
    let mut out = vec![ZERO; rep.dim];
    for t in &rep.terms {
        let c = matrix::inner(x, &t.z);
        for (o, y) in out.iter_mut().zip(&t.y) {
            *o += c * y;
        }
    }
    Ok(out)
}

/// `Σ_k ‖z_k‖‖y_k‖`.
pub fn rep_cost(rep: &NuclearRep) -> f64 {
    rep.terms
        .iter()
        .map(|t| matrix::norm(&t.z) * matrix::norm(&t.y))
        .sum()
}

pub fn optimal_rep(t: &Matrix) -> Result<NuclearRep> {
    optimal_rep_with(t, &Tolerances::default())
}

/// The SVD representation `z_k = σ_k v_k`, `y_k = u_k`, whose cost is the
/// trace norm. Singular values at or below `rank·σ_max` are dropped.
pub fn optimal_rep_with(t: &Matrix, tol: &Tolerances) -> Result<NuclearRep> {
    let n = t.ensure_square()?;
    let f = svd(t)?;
    let cut = tol.rank * f.max();
    let mut r = NuclearRep::empty(n);
    for (k, &s) in f.singular_values.iter().enumerate() {
        if s <= cut || s == 0.0 {
            continue;
        }
        r.push(f.v.col(k).into_iter().map(|v| v * s).collect(), f.u.col(k))?;
    }
    Ok(r)
}

/// Representation of `T*`: `T*x = Σ_k ⟨x;y_k⟩ z_k`.
pub fn adjoint_rep(rep: &NuclearRep) -> NuclearRep {
    NuclearRep {
        dim: rep.dim,
        terms: rep
            .terms
            .iter()
            .map(|t| NuclearTerm {
                z: t.y.clone(),
                y: t.z.clone(),
            })
            .collect(),
    }
}

/// Representation of `L·T·R`: terms `(R*z_k, L y_k)`.
pub fn compose_rep(l: &Matrix, rep: &NuclearRep, r: &Matrix) -> Result<NuclearRep> {
    let n = rep.dim;
    for (name, m) in [("L", l), ("R", r)] {
        if m.shape() != (n, n) {
            return Err(Error::DimensionMismatch(format!(
                "{name} is {}x{}, representation acts on dimension {n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let r_adj = r.adjoint();
    let mut out = NuclearRep::empty(n);
    for t in &rep.terms {
        out.push(r_adj.mul_vec(&t.z), l.mul_vec(&t.y))?;
    }
    Ok(out)
}

/// Re-expresses a representation through an invertible mixing matrix (see
/// [`mix_representation`]); the operator is unchanged.
pub fn mix_rep(rep: &NuclearRep, g: &Matrix) -> Result<NuclearRep> {
    NuclearRep::from_functional_tensor(&mix_representation(&rep.to_functional_tensor(), g)?)
}

/// Nuclear norm, the infimum of [`rep_cost`] over all representations of
/// `T`. It coincides with the trace norm and is attained by [`optimal_rep`].
pub fn nuclear_norm(t: &Matrix) -> Result<f64> {
    t.ensure_square()?;
    schatten::trace_norm(t)
}

/// The operator `x ↦ Σ_k f_k(x) y_k` of an element of `X*⊗Y`.
///
/// The X-slot of each pair holds the bilinear coordinates `φ_k` of `f_k`
/// (`f_k(x) = Σ φ_k[j] x[j]`), so the result is `Σ_k y_k φ_kᵀ`, the
/// transpose of the coefficient matrix; in Riesz terms `z_k = conj(φ_k)`.
/// Reading the slot as `z_k` directly would make the map conjugate-linear
/// in `f` and break the contraction bound.
pub fn k_map(f: &TensorElement) -> Matrix {
    coeff_matrix(f).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{basis_vector as e, real_vector};

    #[test]
    fn apply_examples() {
        let mut r = NuclearRep::empty(2);
        r.push(e(2, 0), e(2, 1)).unwrap();
        assert_eq!(nuclear_apply(&r, &e(2, 0)).unwrap(), e(2, 1));
        assert_eq!(
            nuclear_apply(&NuclearRep::empty(3), &e(3, 2)).unwrap(),
            vec![ZERO; 3]
        );
        assert!(nuclear_apply(&r, &e(3, 0)).is_err());
    }

    #[test]
    fn cost_examples() {
        let mut r = NuclearRep::empty(2);
        r.push(real_vector(&[2.0, 0.0]), real_vector(&[0.0, 3.0]))
            .unwrap();
        assert_eq!(rep_cost(&r), 6.0);
        assert_eq!(rep_cost(&NuclearRep::empty(2)), 0.0);
    }

    #[test]
    fn optimal_rep_of_diagonal() {
        let r = optimal_rep(&Matrix::from_real_diag(&[3.0, 4.0])).unwrap();
        assert_eq!(r.len(), 2);
        assert!((rep_cost(&r) - 7.0).abs() < 1e-15);
        assert!((r.terms()[0].z[1].norm() - 4.0).abs() < 1e-15);
        assert!((r.terms()[1].z[0].norm() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn optimal_rep_of_rank_one() {
        let y = vec![C64::new(1.0, -1.0), C64::new(2.0, 0.0), ZERO];
        let z = vec![C64::new(0.0, 1.0), ZERO, C64::new(-1.0, 3.0)];
        let t = Matrix::outer(&y, &z);
        let r = optimal_rep(&t).unwrap();
        assert_eq!(r.len(), 1);
        let expected = matrix::norm(&y) * matrix::norm(&z);
        assert!((rep_cost(&r) - expected).abs() < 1e-13);
        assert!((nuclear_norm(&t).unwrap() - expected).abs() < 1e-13);
        assert!((&r.to_matrix() - &t).frobenius_norm() < 1e-14);
    }

    #[test]
    fn adjoint_examples() {
        let z = vec![C64::new(1.0, 2.0), C64::new(0.0, -1.0)];
        let y = vec![C64::new(0.5, 0.0), C64::new(2.0, 2.0)];
        let mut r = NuclearRep::empty(2);
        r.push(z.clone(), y.clone()).unwrap();
        let a = adjoint_rep(&r);
        assert_eq!(
            a.terms()[0],
            NuclearTerm {
                z: y.clone(),
                y: z.clone()
            }
        );
        assert_eq!(a.to_matrix(), Matrix::outer(&z, &y));
        assert!((&a.to_matrix() - &r.to_matrix().adjoint()).frobenius_norm() < 1e-15);
        assert_eq!(adjoint_rep(&a), r);
        assert_eq!(rep_cost(&a), rep_cost(&r));
    }

    #[test]
    fn compose_examples() {
        let mut r = NuclearRep::empty(2);
        r.push(real_vector(&[1.0, 1.0]), vec![C64::new(0.0, 1.0), ZERO])
            .unwrap();
        let i = Matrix::identity(2);
        assert_eq!(compose_rep(&i, &r, &i).unwrap(), r);
        let two = i.scale(C64::new(2.0, 0.0));
        let c = compose_rep(&two, &r, &i).unwrap();
        assert_eq!(rep_cost(&c), 2.0 * rep_cost(&r));
        assert!(compose_rep(&Matrix::identity(3), &r, &i).is_err());
    }

    #[test]
    fn k_map_of_single_pair() {
        // functional with coordinates φ = conj(z) so that f(x) = ⟨x;z⟩
        let z = vec![C64::new(0.0, 1.0), C64::new(2.0, -1.0)];
        let y = vec![C64::new(1.0, 0.0), C64::new(1.0, 1.0)];
        let phi: Vec<C64> = z.iter().map(|c| c.conj()).collect();
        let f = TensorElement::single(phi, y.clone()).unwrap();
        assert!((&k_map(&f) - &Matrix::outer(&y, &z)).frobenius_norm() < 1e-15);
    }

    #[test]
    fn functional_tensor_round_trip() {
        let mut r = NuclearRep::empty(2);
        r.push(vec![C64::new(0.0, 1.0), ZERO], real_vector(&[1.0, 2.0]))
            .unwrap();
        let f = r.to_functional_tensor();
        assert_eq!(NuclearRep::from_functional_tensor(&f).unwrap(), r);
        assert!((&k_map(&f) - &r.to_matrix()).frobenius_norm() < 1e-15);
    }

    #[test]
    fn json_shape() {
        let mut r = NuclearRep::empty(1);
        r.push(real_vector(&[2.0]), real_vector(&[3.0])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"dim":1,"terms":[{"z":[[2.0,0.0]],"y":[[3.0,0.0]]}]}"#
        );
        let back: NuclearRep = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<NuclearRep>(
            r#"{"dim":2,"terms":[{"z":[[1,0]],"y":[[1,0]]}]}"#
        )
        .is_err());
    }
}
