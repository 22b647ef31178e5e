use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use uwis_bench::random_graph;
use uwis_core::solver::{enumerate_alpha_sets, solve_bnb, solve_oracle};
use uwis_core::Limits;

fn oracle_vs_bnb(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("mwis");
    for n in [12, 16, 20] {
        let g = random_graph(n, 0.3, 7);
        group.bench_with_input(BenchmarkId::new("oracle", n), &g, |b, g| {
            b.iter(|| solve_oracle(black_box(g), &limits).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bnb", n), &g, |b, g| {
            b.iter(|| solve_bnb(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("enumerate", n), &g, |b, g| {
            b.iter(|| enumerate_alpha_sets(black_box(g), &limits).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("bnb-large");
    for n in [40, 60] {
        let g = random_graph(n, 0.2, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| solve_bnb(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, oracle_vs_bnb);
criterion_main!(benches);
