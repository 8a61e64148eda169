use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nuclear_bench::{hermitian, matrix, tensor, SIZES};
use nuclear_core::{hermitian_eig, optimal_rep, polar, projective_norm, svd, trace_norm};

fn decompositions(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    for n in SIZES {
        let a = matrix(n);
        let h = hermitian(n);
        g.bench_with_input(BenchmarkId::new("svd", n), &a, |b, a| {
            b.iter(|| svd(black_box(a)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("hermitian_eig", n), &h, |b, h| {
            b.iter(|| hermitian_eig(black_box(h)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("polar", n), &a, |b, a| {
            b.iter(|| polar(black_box(a)).unwrap())
        });
    }
    g.finish();
}

fn norms(c: &mut Criterion) {
    let mut g = c.benchmark_group("norms");
    for n in SIZES {
        let a = matrix(n);
        let f = tensor(n, n);
        g.bench_with_input(BenchmarkId::new("trace_norm", n), &a, |b, a| {
            b.iter(|| trace_norm(black_box(a)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("optimal_rep", n), &a, |b, a| {
            b.iter(|| optimal_rep(black_box(a)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("projective_norm", n), &f, |b, f| {
            b.iter(|| projective_norm(black_box(f)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, decompositions, norms);
criterion_main!(benches);
