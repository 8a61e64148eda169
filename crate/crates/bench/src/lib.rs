//! Seeded inputs shared by the benchmarks in `benches/`.

use nuclear_core::ensemble::{ginibre, random_tensor, trial_rng};
use nuclear_core::{Matrix, TensorElement};

pub const SIZES: [usize; 4] = [4, 8, 16, 32];

pub fn matrix(n: usize) -> Matrix {
    ginibre(&mut trial_rng(1, "bench", n, 0), n, n)
}

pub fn hermitian(n: usize) -> Matrix {
    matrix(n).hermitian_part()
}

pub fn tensor(n: usize, terms: usize) -> TensorElement {
    random_tensor(&mut trial_rng(1, "bench-tensor", n, terms), n, n, terms)
}
