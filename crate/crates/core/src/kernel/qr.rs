use crate::matrix::{self, Matrix, C64, ZERO};

/// `A = Q·R` with `Q` unitary (`m×m`) and `R` upper trapezoidal.
#[derive(Debug, Clone)]
pub struct Qr {
    pub q: Matrix,
    pub r: Matrix,
}

/// Householder QR.
pub fn qr(a: &Matrix) -> Qr {
    let (m, n) = a.shape();
    let mut r = a.clone();
    let mut q = Matrix::identity(m);
    for k in 0..n.min(m.saturating_sub(1)) {
        let x: Vec<C64> = (k..m).map(|i| r[(i, k)]).collect();
        let nx = matrix::norm(&x);
        if nx == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            x[0] / x[0].norm()
        };
        let alpha = -phase * nx;
        let mut v = x;
        v[0] -= alpha;
        let nv = matrix::norm(&v);
        if nv == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= nv;
        }
        // R ← (I − 2vv*)R on rows k..m
        for j in 0..n {
            let dot: C64 = (k..m).map(|i| v[i - k].conj() * r[(i, j)]).sum();
            for i in k..m {
                r[(i, j)] -= v[i - k] * dot * 2.0;
            }
        }
        // Q ← Q(I − 2vv*) on columns k..m
        for i in 0..m {
            let dot: C64 = (k..m).map(|j| q[(i, j)] * v[j - k]).sum();
            for j in k..m {
                q[(i, j)] -= dot * v[j - k].conj() * 2.0;
            }
        }
        for i in k + 1..m {
            r[(i, k)] = ZERO;
        }
    }
    Qr { q, r }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_complex_input() {
        let a = Matrix::from_fn(4, 3, |i, j| {
            C64::new((i * 3 + j) as f64 - 4.0, (i as f64 - j as f64).sin())
        });
        let f = qr(&a);
        assert!(f.q.orthonormality_defect() < 1e-14);
        assert!((&(&f.q * &f.r) - &a).frobenius_norm() < 1e-13);
        for j in 0..3 {
            for i in j + 1..4 {
                assert_eq!(f.r[(i, j)], ZERO);
            }
        }
    }
}
