//! Compares the rayon-backed kernels against the sequential fallback on a
//! seeded random graph. Both paths produce bit-identical numbers; the only
//! question is speed, which depends on core count and graph size.
//!
//! Run with `cargo bench`, or `cargo bench --no-default-features` to measure
//! the build without the parallel feature compiled in at all.

use criterion::{criterion_group, criterion_main, Criterion};
use netreport::exec::Execution;
use netreport::graph::Graph;
use netreport::spectral::{
    algebraic_connectivity, pagerank, spectral_radius, top_singular_values, PageRankOptions,
};
use netreport::stats::{point_stats, AnalysisConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

/// Seeded G(n, m) without self-loops.
fn bench_graph(n: u32, m: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE9C);
    let mut seen = std::collections::HashSet::with_capacity(m * 2);
    let mut pairs = Vec::with_capacity(m);
    while pairs.len() < m {
        let s = rng.random_range(0..n);
        let t = rng.random_range(0..n);
        if s == t {
            continue;
        }
        let key = if s < t { (s, t) } else { (t, s) };
        if seen.insert(key) {
            pairs.push(key);
        }
    }
    Graph::from_pairs(false, false, n as usize, &pairs).expect("bench graph")
}

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn bench_pagerank(c: &mut Criterion) {
    let g = bench_graph(2_000, 20_000);
    let mut group = c.benchmark_group("pagerank");
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            let opts = PageRankOptions { exec, ..PageRankOptions::default() };
            b.iter(|| black_box(pagerank(black_box(&g), &opts).unwrap().scores.len()));
        });
    }
    group.finish();
}

fn bench_spectral_radius(c: &mut Criterion) {
    let g = bench_graph(2_000, 20_000);
    let mut group = c.benchmark_group("spectral_radius");
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(spectral_radius(black_box(&g), exec, 1e-10).value));
        });
    }
    group.finish();
}

fn bench_connectivity(c: &mut Criterion) {
    let g = bench_graph(2_000, 20_000);
    let mut group = c.benchmark_group("algebraic_connectivity");
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(algebraic_connectivity(black_box(&g), exec, 1e-10).value));
        });
    }
    group.finish();
}

fn bench_singular_values(c: &mut Criterion) {
    let g = bench_graph(2_000, 20_000);
    let mut group = c.benchmark_group("top_20_singular_values");
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(top_singular_values(black_box(&g), 20, exec, 1e-10).values.len()));
        });
    }
    group.finish();
}

fn bench_point_stats(c: &mut Criterion) {
    let g = bench_graph(2_000, 20_000);
    let mut group = c.benchmark_group("point_stats");
    group.sample_size(20);
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            let cfg = AnalysisConfig { exec, ..AnalysisConfig::default() };
            b.iter(|| black_box(point_stats(black_box(&g), &cfg).num_nodes));
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_pagerank,
    bench_spectral_radius,
    bench_connectivity,
    bench_singular_values,
    bench_point_stats
);
criterion_main!(benches);
