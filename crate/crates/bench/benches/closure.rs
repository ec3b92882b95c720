use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use conseq_bench::{chain, layered, mixed_ternary};
use conseq_core::{
    check_axioms, close, close_naive, closed_form_ternary, tabulate, ClosureEngine, DeductionSet,
};

fn first_symbol(system: &conseq_core::LogicSystem, name: &str) -> DeductionSet {
    DeductionSet::from_names(system.language().clone(), [name]).unwrap()
}

fn chain_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain");
    for lambda in [100, 1_000, 10_000] {
        let system = chain(lambda);
        let start = first_symbol(&system, "s0");
        let engine = ClosureEngine::new(&system);
        group.bench_with_input(BenchmarkId::new("semi_naive", lambda), &start, |b, x| {
            b.iter(|| engine.close(black_box(x)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("one_shot", lambda), &start, |b, x| {
            b.iter(|| close(&system, black_box(x)).unwrap())
        });
        if lambda <= 1_000 {
            group.bench_with_input(BenchmarkId::new("naive", lambda), &start, |b, x| {
                b.iter(|| close_naive(&system, black_box(x)).unwrap())
            });
        }
    }
    group.finish();
}

fn mixed(c: &mut Criterion) {
    let mut group = c.benchmark_group("mixed_ternary");
    for rules in [100, 10_000] {
        let system = mixed_ternary(rules);
        let all = DeductionSet::from_ids(system.language().clone(), system.language().ids());
        let engine = ClosureEngine::new(&system);
        group.bench_with_input(BenchmarkId::new("closed_form", rules), &all, |b, x| {
            b.iter(|| closed_form_ternary(&system, black_box(x)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("semi_naive", rules), &all, |b, x| {
            b.iter(|| engine.close(black_box(x)).unwrap())
        });
    }
    group.finish();
}

fn layers(c: &mut Criterion) {
    let system = layered(64, 32);
    let engine = ClosureEngine::new(&system);
    let seeds = DeductionSet::from_names(
        system.language().clone(),
        (0..64).map(|i| format!("n0_{i}")),
    )
    .unwrap();
    c.bench_function("layered_64x32", |b| {
        b.iter(|| engine.close(black_box(&seeds)).unwrap())
    });
}

fn laws(c: &mut Criterion) {
    let mut group = c.benchmark_group("tabulate_and_check");
    group.sample_size(10);
    for lambda in [7, 11, 15] {
        let system = chain(lambda);
        let universe = DeductionSet::from_ids(system.language().clone(), system.language().ids());
        group.bench_with_input(
            BenchmarkId::from_parameter(lambda + 1),
            &universe,
            |b, u| b.iter(|| check_axioms(&tabulate(&system, u).unwrap())),
        );
    }
    group.finish();
}

criterion_group!(benches, chain_closure, mixed, layers, laws);
criterion_main!(benches);
