use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use peterson_bench::{dense_localized_product, monk_pairs, quadratic_generators};
use peterson_core::oracle::{expand_localized, oracle_check_monk};
use peterson_core::presentation::{buchberger, ideal_k, vanishing_check};
use peterson_core::schubert::{expand_monomial, monk_product};

fn monk(c: &mut Criterion) {
    let mut group = c.benchmark_group("monk_product_sweep");
    for n in [6u32, 8, 10] {
        let pairs = monk_pairs(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pairs, |b, pairs| {
            b.iter(|| {
                for (i, a) in pairs {
                    black_box(monk_product(*i, a).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand_p1_power");
    for n in [8u32, 12] {
        let factors = vec![1; n as usize - 1];
        group.bench_with_input(BenchmarkId::from_parameter(n), &factors, |b, f| {
            b.iter(|| expand_monomial(n, black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [6u32, 8] {
        let f = dense_localized_product(n);
        group.bench_with_input(BenchmarkId::new("expand_localized", n), &f, |b, f| {
            b.iter(|| expand_localized(black_box(f)).unwrap())
        });
    }
    group.bench_function("oracle_check_monk/6", |b| {
        b.iter(|| oracle_check_monk(6).unwrap())
    });
    group.finish();
}

fn presentation(c: &mut Criterion) {
    let mut group = c.benchmark_group("presentation");
    group.sample_size(10);
    group.bench_function("ideal_k/5", |b| b.iter(|| ideal_k(5).unwrap()));
    group.bench_function("vanishing_check/6", |b| {
        b.iter(|| vanishing_check(6).unwrap())
    });
    for n in [4u32, 5, 6] {
        let gens = quadratic_generators(n);
        group.bench_with_input(
            BenchmarkId::new("buchberger_quadratics", n),
            &gens,
            |b, g| b.iter(|| buchberger(black_box(g)).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, monk, powers, oracle, presentation);
criterion_main!(benches);
