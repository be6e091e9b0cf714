//! Parallel-versus-sequential sweeps over the crate's heavy workloads.
//!
//! Each pair runs the same closure through `batch::*` (rayon under the
//! default `parallel` feature) and through the always-sequential twins, so
//! one build measures the speedup. Without the feature the two paths
//! coincide and the numbers should match.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use quasichain::batch;
use quasichain::generators::{self, mask_count};
use quasichain::graph::BipartiteGraph;
use quasichain::letterrep::encode_enhanced;
use quasichain::optimize::{independent_dominating_set, max_edge_biclique};
use quasichain::oracles::brute_quasi_chain;
use quasichain::recognition::is_quasi_chain;

/// Recognition + oracle agreement over the full (4,4) catalog.
fn recognition_catalog(c: &mut Criterion) {
    let range = 0..mask_count(4, 4);
    let check = |mask: u64| {
        let g = BipartiteGraph::from_mask(4, 4, mask);
        let fast = is_quasi_chain(&g).is_quasi_chain();
        let slow = brute_quasi_chain(&g).unwrap();
        (fast != slow).then_some(mask)
    };
    let mut group = c.benchmark_group("recognition_catalog_4x4");
    group.sample_size(10);
    group.bench_function("par", |b| {
        b.iter(|| black_box(batch::filter_map_range(range.clone(), check)))
    });
    group.bench_function("seq", |b| {
        b.iter(|| black_box(batch::filter_map_range_seq(range.clone(), check)))
    });
    group.finish();
}

/// Enhanced-word encoding over a batch of random quasi-chain instances.
fn encode_batch(c: &mut Criterion) {
    let instances: Vec<BipartiteGraph> = (0..64)
        .map(|seed| generators::random_quasi_chain(40, 0.3, seed).unwrap())
        .collect();
    let encode_one = |g: &BipartiteGraph| encode_enhanced(g).unwrap().word.len();
    let mut group = c.benchmark_group("encode_batch_n40");
    group.sample_size(10);
    group.bench_function("par", |b| {
        b.iter(|| black_box(batch::map_slice(&instances, encode_one)))
    });
    group.bench_function("seq", |b| {
        b.iter(|| black_box(batch::map_slice_seq(&instances, encode_one)))
    });
    group.finish();
}

/// Both exact solvers over a batch of random instances.
fn solver_batch(c: &mut Criterion) {
    let instances: Vec<BipartiteGraph> = (0..32)
        .map(|seed| generators::random_quasi_chain(24, 0.3, seed).unwrap())
        .collect();
    let solve_one = |g: &BipartiteGraph| {
        let biclique = max_edge_biclique(g).unwrap().edge_count;
        let ids = independent_dominating_set(g).unwrap().len();
        biclique + ids
    };
    let mut group = c.benchmark_group("solver_batch_n24");
    group.sample_size(10);
    group.bench_function("par", |b| {
        b.iter(|| black_box(batch::map_slice(&instances, solve_one)))
    });
    group.bench_function("seq", |b| {
        b.iter(|| black_box(batch::map_slice_seq(&instances, solve_one)))
    });
    group.finish();
}

criterion_group!(benches, recognition_catalog, encode_batch, solver_batch);
criterion_main!(benches);
