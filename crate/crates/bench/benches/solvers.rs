use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hardhom_core::corpus::random_instances;
use hardhom_core::gadgets::build_t_clique;
use hardhom_core::solver::for_each_solution_by_twins;
use hardhom_core::{
    min_vertex_cover, solve_backtrack, solve_brute, solve_vc, ListHomInstance, Mode,
};
use std::ops::ControlFlow;

fn strategies(c: &mut Criterion) {
    let corpus = random_instances(40, 8, 5, 11);
    let mut group = c.benchmark_group("random list-hom, n <= 8, h <= 5");
    group.bench_function("brute", |b| {
        b.iter(|| {
            corpus
                .iter()
                .filter(|i| solve_brute(i, Mode::Plain).unwrap().is_some())
                .count()
        })
    });
    group.bench_function("backtrack", |b| {
        b.iter(|| {
            corpus
                .iter()
                .filter(|i| solve_backtrack(i, Mode::Plain).0.is_some())
                .count()
        })
    });
    let covers: Vec<Vec<usize>> = corpus.iter().map(|i| min_vertex_cover(&i.g)).collect();
    group.bench_function("vc", |b| {
        b.iter(|| {
            corpus
                .iter()
                .zip(&covers)
                .filter(|(i, c)| solve_vc(i, c).unwrap().0.is_some())
                .count()
        })
    });
    group.finish();
}

fn rigidity(c: &mut Criterion) {
    let mut group = c.benchmark_group("clique chain self-maps");
    group.sample_size(10);
    for (k, t) in [(1, 1), (1, 2), (2, 1)] {
        let chain = build_t_clique(k, t).unwrap();
        let inst = ListHomInstance::full(chain.graph.clone(), chain.graph.clone());
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("k={k} t={t}")),
            &inst,
            |b, inst| {
                b.iter(|| {
                    let mut count = 0u64;
                    for_each_solution_by_twins(black_box(inst), Mode::Plain, |_| {
                        count += 1;
                        ControlFlow::Continue(())
                    });
                    count
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, strategies, rigidity);
criterion_main!(benches);
