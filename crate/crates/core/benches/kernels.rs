//! Parallel kernels on a one-thread pool against the full pool.
//!
//! `cargo bench -p lie2-core` compares the two; build with
//! `--no-default-features` for the plain sequential fallback.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPool;

use lie2_core::charlib::h_series_ll1;
use lie2_core::freealg::{build_quotient, full_character};
use lie2_core::poset::{interval_cohen_macaulay, segment_semimodularity, Com2Poset, DEFAULT_CHAIN_BUDGET};

fn pools() -> Vec<(String, ThreadPool)> {
    let full = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut out = vec![("1".to_string(), rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap())];
    if full > 1 {
        out.push((full.to_string(), rayon::ThreadPoolBuilder::new().num_threads(full).build().unwrap()));
    }
    out
}

fn kernels(c: &mut Criterion) {
    let pools = pools();
    let pi5 = Com2Poset::build(5).unwrap();
    let model = build_quotient(5).unwrap();

    let mut g = c.benchmark_group("ll1_series_n9");
    for (name, pool) in &pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(h_series_ll1(9).unwrap())))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("quotient_n5");
    g.sample_size(10);
    for (name, pool) in &pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(build_quotient(5).unwrap())))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("traces_n5");
    g.sample_size(10);
    for (name, pool) in &pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(full_character(&model).unwrap())))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("poset_segments_n5");
    g.sample_size(10);
    for (name, pool) in &pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(segment_semimodularity(&pi5))))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("poset_intervals_n5");
    g.sample_size(10);
    for (name, pool) in &pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(interval_cohen_macaulay(&pi5, DEFAULT_CHAIN_BUDGET).unwrap())))
        });
    }
    g.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
