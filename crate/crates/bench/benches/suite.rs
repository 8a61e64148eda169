use criterion::{criterion_group, criterion_main, Criterion};
use nuclear_core::{run_suite, SuiteConfig};

fn small_suite(c: &mut Criterion) {
    let config = SuiteConfig {
        dims: vec![2, 4],
        trials: 5,
        ..SuiteConfig::default()
    };
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("all_dims_2_4_trials_5", |b| {
        b.iter(|| run_suite(&config).unwrap())
    });
    g.finish();
}

criterion_group!(benches, small_suite);
criterion_main!(benches);
