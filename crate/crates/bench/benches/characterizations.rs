use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use uwis_bench::unique_instance;
use uwis_core::characterize::{check, Method};
use uwis_core::perturbation::compute_radius;
use uwis_core::Limits;

fn methods(c: &mut Criterion) {
    let limits = Limits::default();
    let (g, i) = unique_instance(14, 0.3);
    let mut group = c.benchmark_group("check-n14");
    for method in [
        Method::Oracle,
        Method::Deletion,
        Method::PocketSum,
        Method::PocketMwis,
        Method::Boundary,
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(method), &method, |b, &m| {
            b.iter(|| check(m, black_box(&g), &i, &limits).unwrap())
        });
    }
    group.finish();

    c.bench_function("radius-n10", |b| {
        let (g, i) = unique_instance(10, 0.3);
        b.iter(|| compute_radius(black_box(&g), &i, &limits).unwrap())
    });
}

criterion_group!(benches, methods);
criterion_main!(benches);
