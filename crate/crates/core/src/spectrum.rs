//! Eigenvalues of general (non-normal) small matrices through the
//! characteristic polynomial.
//!
//! The coefficients are recovered from determinant samples on a circle by a
//! discrete Fourier transform, so they never pass through the diagonal of
//! `T`; the roots come from Durand–Kerner iteration. Intended for the small
//! dimensions where this route is well conditioned.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::kernel::determinant;
use crate::matrix::{Matrix, C64, ONE};

const MAX_ITERATIONS: usize = 2000;

/// Monic characteristic polynomial `det(λI − T)`, coefficients lowest
/// degree first.
pub fn characteristic_polynomial(t: &Matrix) -> Result<Vec<C64>> {
    let n = t.ensure_square()?;
    let samples = n + 1;
    let radius = t.frobenius_norm().max(1.0);
    let omega = |k: f64| C64::from_polar(1.0, TAU * k / samples as f64);
    let values: Vec<C64> = (0..samples)
        .map(|j| {
            let lambda = omega(j as f64) * radius;
            let shifted = Matrix::from_fn(n, n, |a, b| {
                let d = if a == b { lambda } else { C64::new(0.0, 0.0) };
                d - t[(a, b)]
            });
            determinant(&shifted)
        })
        .collect();
    let mut coeffs: Vec<C64> = (0..=n)
        .map(|k| {
            let s: C64 = values
                .iter()
                .enumerate()
                .map(|(j, q)| q * omega(-((j * k) as f64)))
                .sum();
            s / (samples as f64 * radius.powi(k as i32))
        })
        .collect();
    coeffs[n] = ONE;
    Ok(coeffs)
}

/// Roots of a monic polynomial (coefficients lowest degree first).
pub fn polynomial_roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let bound = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n).map(|k| seed.powi(k as i32) * bound).collect();
    let eval = |x: C64| {
        coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, c| acc * x + c)
    };

    for _ in 0..MAX_ITERATIONS {
        let mut change = 0.0f64;
        for i in 0..n {
            let xi = roots[i];
            let denom: C64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &xj)| xi - xj)
                .product();
            if denom.norm() == 0.0 {
                roots[i] += C64::new(1e-8, 1e-8) * bound;
                change = f64::INFINITY;
                continue;
            }
            let step = eval(xi) / denom;
            roots[i] -= step;
            change = change.max(step.norm());
        }
        // stop on a small step or once every residual is at rounding level
        let at_rounding = roots.iter().all(|&x| {
            let magnitude = coeffs
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * x.norm() + c.norm());
            eval(x).norm() <= 16.0 * f64::EPSILON * magnitude
        });
        if change <= 1e-15 * bound || at_rounding {
            return Ok(roots);
        }
    }
    Err(Error::NoConvergence {
        routine: "polynomial_roots",
        sweeps: MAX_ITERATIONS,
    })
}

/// All eigenvalues of a square matrix, in no particular order.
pub fn eigenvalues(t: &Matrix) -> Result<Vec<C64>> {
    polynomial_roots(&characteristic_polynomial(t)?)
}
