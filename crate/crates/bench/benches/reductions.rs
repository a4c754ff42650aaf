use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hardhom_core::{
    pipeline_chi, pipeline_main, pipeline_vc, reduce_3col_to_listhom, reduce_3col_to_listhom_vc,
    solve_backtrack, Graph,
};

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("constructions");
    for (name, g) in [
        ("C6", Graph::cycle(6)),
        ("W4", Graph::wheel(4)),
        ("P8", Graph::path(8)),
    ] {
        group.bench_with_input(BenchmarkId::new("configurations r=2", name), &g, |b, g| {
            b.iter(|| reduce_3col_to_listhom(black_box(g), 2, 4).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bucket pairs r=2", name), &g, |b, g| {
            b.iter(|| reduce_3col_to_listhom_vc(black_box(g), 2).unwrap())
        });
    }
    group.finish();
}

fn pipelines(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce and solve, C5");
    group.sample_size(10);
    let g = Graph::cycle(5);
    group.bench_function("main", |b| {
        b.iter(|| solve_backtrack(pipeline_main(&g, 2).unwrap().out(), Default::default()))
    });
    group.bench_function("chi", |b| {
        b.iter(|| solve_backtrack(pipeline_chi(&g, 2).unwrap().out(), Default::default()))
    });
    group.bench_function("vc", |b| {
        b.iter(|| solve_backtrack(pipeline_vc(&g, 2).unwrap().out(), Default::default()))
    });
    group.finish();
}

criterion_group!(benches, constructions, pipelines);
criterion_main!(benches);
