use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gp_forcing::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, forcing_number_by_hitting_set,
    forcing_number_by_subset_search, forcing_polynomial, Engine, Graph,
};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_perfect_matchings");
    for n in [10, 15, 20] {
        let g = Graph::generalized_petersen(n, 2).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| enumerate_perfect_matchings(g))
        });
    }
    group.finish();
}

fn engines(c: &mut Criterion) {
    let g = Graph::generalized_petersen(15, 2).unwrap();
    let ms = enumerate_perfect_matchings(&g);
    let mut group = c.benchmark_group("forcing_gp15");
    group.bench_function("alternating_cycles", |b| {
        b.iter(|| {
            ms.iter()
                .map(|&m| enumerate_alternating_cycles(&g, m).unwrap().len())
                .sum::<usize>()
        })
    });
    group.bench_function("hitting_set", |b| {
        b.iter(|| {
            ms.iter()
                .map(|&m| forcing_number_by_hitting_set(&g, m).unwrap().forcing_number)
                .sum::<usize>()
        })
    });
    group.bench_function("subset_search", |b| {
        b.iter(|| {
            ms.iter()
                .map(|&m| {
                    forcing_number_by_subset_search(&g, m)
                        .unwrap()
                        .forcing_number
                })
                .sum::<usize>()
        })
    });
    group.finish();
}

fn polynomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("forcing_polynomial");
    group.sample_size(10);
    for n in [12, 18] {
        let g = Graph::generalized_petersen(n, 2).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| forcing_polynomial(g, Engine::HittingSet, Some(1)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, engines, polynomial);
criterion_main!(benches);
