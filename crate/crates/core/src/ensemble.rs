//! Seeded random-matrix ensembles.
//!
//! Every trial draws from its own ChaCha stream keyed by
//! `(seed, property id, dimension, trial index)`, so a trial reproduces
//! exactly no matter which other trials or properties run alongside it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::kernel::qr;
use crate::matrix::{self, Matrix, C64};
use crate::nuclear::NuclearRep;
use crate::tensor::TensorElement;

pub type TrialRng = ChaCha8Rng;

/// 64-bit FNV-1a, used only to derive stream keys.
fn fnv1a(bytes: impl IntoIterator<Item = u8>, mut h: u64) -> u64 {
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn stream_key(property: &str, dim: usize, trial: usize) -> u64 {
    let h = fnv1a(property.bytes(), 0xcbf2_9ce4_8422_2325);
    let h = fnv1a((dim as u64).to_le_bytes(), h);
    fnv1a((trial as u64).to_le_bytes(), h)
}

pub fn trial_rng(seed: u64, property: &str, dim: usize, trial: usize) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed ^ stream_key(property, dim, trial))
}

/// Standard complex normal: `E|z|² = 1`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    (0..n).map(|_| complex_normal(rng)).collect()
}

pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    let v = gaussian_vector(rng, n);
    let nv = matrix::norm(&v);
    v.into_iter().map(|z| z / nv).collect()
}

/// Ginibre matrix: i.i.d. standard complex normal entries.
pub fn ginibre<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Haar unitary: QR of a Ginibre matrix with the phases of `diag(R)` moved
/// into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let f = qr(&ginibre(rng, n, n));
    let mut q = f.q;
    for k in 0..n {
        let r = f.r[(k, k)];
        let phase = if r.norm() > 0.0 {
            r / r.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        for i in 0..n {
            q[(i, k)] *= phase;
        }
    }
    q
}

/// `G*G` for Ginibre `G`.
pub fn random_psd<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let g = ginibre(rng, n, n);
    &g.adjoint() * &g
}

/// Ginibre matrix truncated to its `rank` largest singular values.
pub fn low_rank<R: Rng + ?Sized>(rng: &mut R, n: usize, rank: usize) -> Matrix {
    crate::schatten::truncate_spectral(&ginibre(rng, n, n), rank.min(n))
        .expect("rank clamped to dimension")
}

/// `U·diag(d)·V` with Haar `U`, `V` and `d` uniform on `[0, 1]`, so the
/// operator norm is at most one.
pub fn contraction<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let u = haar_unitary(rng, n);
    let v = haar_unitary(rng, n);
    let d: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    &(&u * &Matrix::from_real_diag(&d)) * &v
}

/// `U·diag(d)` with Haar `U` and `d` uniform on `[0, 1]`: a cheaper
/// contraction sampler covering every singular-value profile.
pub fn unitary_times_diagonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let mut u = haar_unitary(rng, n);
    for j in 0..n {
        let d: f64 = rng.random();
        for i in 0..n {
            u[(i, j)] *= d;
        }
    }
    u
}

pub fn random_tensor<R: Rng + ?Sized>(
    rng: &mut R,
    dim_x: usize,
    dim_y: usize,
    pairs: usize,
) -> TensorElement {
    let mut f = TensorElement::zero(dim_x, dim_y);
    for _ in 0..pairs {
        let x = gaussian_vector(rng, dim_x);
        let y = gaussian_vector(rng, dim_y);
        f.push(x, y).expect("dimensions match by construction");
    }
    f
}

pub fn random_rep<R: Rng + ?Sized>(rng: &mut R, dim: usize, terms: usize) -> NuclearRep {
    let mut r = NuclearRep::empty(dim);
    for _ in 0..terms {
        let z = gaussian_vector(rng, dim);
        let y = gaussian_vector(rng, dim);
        r.push(z, y).expect("dimensions match by construction");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = ginibre(&mut trial_rng(7, "norm_chain", 4, 3), 4, 4);
        let b = ginibre(&mut trial_rng(7, "norm_chain", 4, 3), 4, 4);
        let c = ginibre(&mut trial_rng(7, "norm_chain", 4, 4), 4, 4);
        let d = ginibre(&mut trial_rng(7, "triangle", 4, 3), 4, 4);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = trial_rng(1, "haar", 6, 0);
        let u = haar_unitary(&mut rng, 6);
        assert!(u.orthonormality_defect() < 1e-13);
    }

    #[test]
    fn contraction_has_norm_at_most_one() {
        let mut rng = trial_rng(1, "contraction", 5, 0);
        for _ in 0..10 {
            let s = contraction(&mut rng, 5);
            assert!(crate::kernel::operator_norm(&s).unwrap() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn ginibre_second_moment() {
        let mut rng = trial_rng(3, "moment", 0, 0);
        let g = ginibre(&mut rng, 100, 100);
        let mean_sq = g.frobenius_norm().powi(2) / 1e4;
        assert!((mean_sq - 1.0).abs() < 0.05, "{mean_sq}");
    }
}
