//! Parallel kernels vs their sequential fallbacks. Requires the `parallel`
//! feature (on by default): `cargo bench -p twinshift-core`.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use twinshift_core::charpoly::{cofactor, cofactor_seq};
use twinshift_core::reconstruct::{find_eight_vertex_graphs, find_eight_vertex_graphs_seq};
use twinshift_core::spectra::isolate_real_roots;
use twinshift_core::{build_nsg, CreationSequence, Polynomial};

fn nsg18() -> twinshift_core::Graph {
    build_nsg(&CreationSequence::parse("2,2,2,2,2,2,2,2,1,1").unwrap())
}

fn g8_target() -> Polynomial {
    // λ(λ+1)(λ⁶ − λ⁵ − 9λ⁴ + 7λ³ + 19λ² − 13λ)
    let inner = Polynomial::from_ints(&[0, -13, 19, 7, -9, -1, 1]);
    &(&Polynomial::monomial(1.into(), 1) * &Polynomial::lambda_plus(1)) * &inner
}

fn bench_cofactor(c: &mut Criterion) {
    let g = nsg18();
    let mut group = c.benchmark_group("cofactor_nsg18");
    group.bench_function("parallel", |b| {
        b.iter(|| cofactor(black_box(&g), 5, 6).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| cofactor_seq(black_box(&g), 5, 6).unwrap())
    });
    group.finish();
}

fn bench_reconstruction(c: &mut Criterion) {
    let target = g8_target();
    let mut group = c.benchmark_group("reconstruct_search");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| find_eight_vertex_graphs(black_box(&target)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| find_eight_vertex_graphs_seq(black_box(&target)).unwrap())
    });
    group.finish();
}

fn bench_isolation(c: &mut Criterion) {
    let phi = twinshift_core::charpoly::charpoly(&nsg18());
    let mut group = c.benchmark_group("isolate_nsg18_spectrum");
    group.sample_size(20);
    group.bench_function("default", |b| {
        b.iter(|| isolate_real_roots(black_box(&phi), 1e-12).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_cofactor, bench_reconstruction, bench_isolation);
criterion_main!(benches);
