use crate::matrix::{Matrix, C64, ONE, ZERO};

struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
}

fn decompose(a: &Matrix) -> Lu {
    let n = a.rows();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    let mut singular = false;
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| lu[(i, k)].norm().total_cmp(&lu[(j, k)].norm()))
            .unwrap();
        if lu[(pivot, k)].norm() == 0.0 {
            singular = true;
            continue;
        }
        if pivot != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = tmp;
            }
            perm.swap(k, pivot);
            sign = -sign;
        }
        let d = lu[(k, k)];
        for i in k + 1..n {
            let f = lu[(i, k)] / d;
            lu[(i, k)] = f;
            for j in k + 1..n {
                let u = lu[(k, j)];
                lu[(i, j)] -= f * u;
            }
        }
    }
    Lu {
        lu,
        perm,
        sign,
        singular,
    }
}

/// Determinant via LU with partial pivoting.
pub fn determinant(a: &Matrix) -> C64 {
    assert!(a.is_square());
    let f = decompose(a);
    if f.singular {
        return ZERO;
    }
    f.lu.diag()
        .into_iter()
        .fold(C64::new(f.sign, 0.0), |acc, d| acc * d)
}

/// Inverse via LU with partial pivoting; `None` when the matrix is
/// numerically singular (pivot below `1e-14·max|a|`).
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    assert!(a.is_square());
    let n = a.rows();
    let f = decompose(a);
    let floor = 1e-14 * a.max_abs();
    if f.singular || f.lu.diag().iter().any(|d| d.norm() <= floor) {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for col in 0..n {
        let mut x: Vec<C64> = f
            .perm
            .iter()
            .map(|&p| if p == col { ONE } else { ZERO })
            .collect();
        for i in 0..n {
            for j in 0..i {
                let l = f.lu[(i, j)];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = f.lu[(i, j)];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= f.lu[(i, i)];
        }
        inv.set_col(col, &x);
    }
    Some(inv)
}
