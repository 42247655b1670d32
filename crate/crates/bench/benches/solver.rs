use copthrottle::chordal::{chordal_throttling, lexbfs_order};
use copthrottle::families::{generate_named, FamilySpec};
use copthrottle::game::{cop_number, solve};
use copthrottle::strategy::{feedback_bound, lambert_w, staged_decomposition, StagedParams};
use copthrottle::throttling::{throttling_report, ReportOptions};
use copthrottle::{Budget, Graph};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn family(spec: &str) -> Graph {
    generate_named(&FamilySpec::parse(spec).unwrap()).unwrap()
}

fn bench_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for (spec, k) in [("petersen", 3), ("grid:rows=4,cols=4", 2), ("cycle:n=20", 2), ("path:n=40", 1)] {
        let g = family(spec);
        group.bench_with_input(BenchmarkId::new(spec, k), &g, |b, g| {
            b.iter(|| solve(black_box(g), k, Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn bench_throttling(c: &mut Criterion) {
    let mut group = c.benchmark_group("throttling");
    group.sample_size(20);
    for spec in ["petersen", "path:n=16", "spider:legs=4,len=3"] {
        let g = family(spec);
        group.bench_function(spec, |b| {
            b.iter(|| throttling_report(black_box(&g), ReportOptions::default()).unwrap())
        });
    }
    let heawood = family("heawood");
    group.bench_function("cop_number/heawood", |b| b.iter(|| cop_number(black_box(&heawood), Budget::default()).unwrap()));
    group.finish();
}

fn bench_chordal(c: &mut Criterion) {
    let mut group = c.benchmark_group("chordal");
    for n in [20, 40] {
        let g = family(&format!("random_chordal:n={n},seed=7"));
        group.bench_with_input(BenchmarkId::new("lexbfs", n), &g, |b, g| b.iter(|| lexbfs_order(black_box(g))));
        group.bench_with_input(BenchmarkId::new("throttling", n), &g, |b, g| {
            b.iter(|| chordal_throttling(black_box(g), Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn bench_strategies(c: &mut Criterion) {
    let mut group = c.benchmark_group("strategies");
    group.sample_size(20);
    let tree = family("random_tree:n=40,seed=3");
    group.bench_function("feedback/tree40", |b| b.iter(|| feedback_bound(black_box(&tree), Budget::default()).unwrap()));
    let path = family("path:n=16");
    let params = StagedParams { long_len: 8, guard_r1: 2, star_deg: 4, mid_len: 4, guard_r2: 1, reserve: None };
    group.bench_function("staged/path16", |b| {
        b.iter(|| staged_decomposition(black_box(&path), params, Budget::default()).unwrap())
    });
    group.bench_function("lambert_w", |b| b.iter(|| lambert_w(black_box(1e6))));
    group.finish();
}

criterion_group!(benches, bench_solver, bench_throttling, bench_chordal, bench_strategies);
criterion_main!(benches);
