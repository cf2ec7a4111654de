use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linkwidth_bench::{diagram, diagram_map, triangulation};
use linkwidth_core::{
    corollary_constants, exact_width, full_report, graph_cheeger, separate, separator_ordering,
    twist_decomposition, BoundConstants, ClassFlags,
};

fn separator(c: &mut Criterion) {
    let mut group = c.benchmark_group("separate");
    for n in [100, 500, 2000] {
        let g = triangulation(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| separate(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn ordering(c: &mut Criterion) {
    let mut group = c.benchmark_group("separator_ordering");
    for n in [100, 1000] {
        let g = triangulation(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| separator_ordering(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn twist(c: &mut Criterion) {
    let m = diagram_map(500);
    c.bench_function("twist_decomposition/500", |b| {
        b.iter(|| twist_decomposition(black_box(&m), &m.faces()))
    });
    let pd = diagram(200);
    c.bench_function("full_report/200", |b| {
        b.iter(|| full_report(black_box(&pd), Some(10.0), ClassFlags::default()).unwrap())
    });
}

fn exhaustive(c: &mut Criterion) {
    let g = triangulation(16).graph();
    c.bench_function("exact_width/16", |b| {
        b.iter(|| exact_width(black_box(&g)).unwrap())
    });
    c.bench_function("graph_cheeger/16", |b| {
        b.iter(|| graph_cheeger(black_box(&g)).unwrap())
    });
}

fn constants(c: &mut Criterion) {
    let k = BoundConstants::standard();
    c.bench_function("corollary_constants", |b| {
        b.iter(|| corollary_constants(black_box(&k)))
    });
}

criterion_group!(benches, separator, ordering, twist, exhaustive, constants);
criterion_main!(benches);
