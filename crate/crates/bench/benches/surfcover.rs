use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use surfcover_bench::{decomposed, planar, surface, tori};
use surfcover_core::{ballcover, nonsep, planarize, treedecomp};

fn embedding(c: &mut Criterion) {
    let mut group = c.benchmark_group("embedding");
    for e in tori(&[16, 64, 256]) {
        let n = e.vertex_count();
        group.bench_with_input(BenchmarkId::new("faces", n), &e, |b, e| {
            b.iter(|| black_box(e.faces()))
        });
        group.bench_with_input(BenchmarkId::new("euler_genus", n), &e, |b, e| {
            b.iter(|| e.euler_genus())
        });
        group.bench_with_input(BenchmarkId::new("dual", n), &e, |b, e| {
            b.iter(|| black_box(e.dual()))
        });
    }
    group.finish();
}

fn cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("nonsep");
    group.sample_size(10);
    for e in tori(&[16, 48]) {
        group.bench_with_input(
            BenchmarkId::new("shortest", e.vertex_count()),
            &e,
            |b, e| b.iter(|| nonsep::shortest_nonseparating_cycle(e).unwrap()),
        );
    }
    let e = surface(2);
    group.bench_function("planarize_genus_2", |b| {
        b.iter(|| planarize::planarizing_edge_set(&e).unwrap())
    });
    group.finish();
}

fn balls(c: &mut Criterion) {
    let mut group = c.benchmark_group("ballcover");
    let g = planar(200);
    let b = ballcover::build_balls(&g, 2).unwrap();
    group.bench_function("build_balls_200", |bn| {
        bn.iter(|| ballcover::build_balls(&g, 2).unwrap())
    });
    group.bench_function("greedy_200", |bn| bn.iter(|| ballcover::greedy_cover(&b)));
    let small = planar(12);
    let sb = ballcover::build_balls(&small, 1).unwrap();
    group.bench_function("shatter_12", |bn| {
        bn.iter(|| ballcover::shatter_dimension(&sb, usize::MAX).unwrap())
    });
    let radius = g.diameter().unwrap().div_ceil(2);
    let centers: Vec<usize> = (0..8).map(|i| i * 25).collect();
    group.bench_function("pq_witness_8", |bn| {
        bn.iter(|| ballcover::pq_witness(&g, radius, &centers).unwrap())
    });
    group.finish();
}

fn central(c: &mut Criterion) {
    let (g, td) = decomposed(300);
    let radius = g.diameter().unwrap().div_ceil(2);
    c.bench_function("central_node_300", |b| {
        b.iter(|| treedecomp::central_node(&g, &td, radius, None).unwrap())
    });
}

criterion_group!(benches, embedding, cycles, balls, central);
criterion_main!(benches);
