use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use toral_bench::{e8, sample_tuples};
use toral_core::{eigen_profile, enumerate_balanced, ExceptionalType, RootSystem, SearchMode};

fn profile_e8(c: &mut Criterion) {
    let rs = e8();
    let tuples = sample_tuples(&rs, 31, 256);
    c.bench_function("eigen_profile/E8/p=31", |b| {
        let mut i = 0;
        b.iter(|| {
            let t = &tuples[i % tuples.len()];
            i += 1;
            black_box(eigen_profile(&rs, t))
        })
    });
}

fn exhaustive_f4(c: &mut Criterion) {
    let rs = RootSystem::build(ExceptionalType::F4);
    c.bench_function("exhaustive/F4/p=23", |b| {
        b.iter(|| black_box(enumerate_balanced(&rs, 23, SearchMode::Exhaustive).unwrap()))
    });
}

fn pruned_e7(c: &mut Criterion) {
    let rs = RootSystem::build(ExceptionalType::E7);
    let mut group = c.benchmark_group("pruned");
    group.sample_size(10);
    group.bench_function("E7/p=43", |b| {
        b.iter(|| black_box(enumerate_balanced(&rs, 43, SearchMode::Pruned).unwrap()))
    });
    group.finish();
}

fn pruned_e8_heavy(c: &mut Criterion) {
    let rs = e8();
    let mut group = c.benchmark_group("pruned-heavy");
    group.sample_size(10);
    group.bench_function("E8/p=41", |b| {
        b.iter_batched(
            || (),
            |_| black_box(enumerate_balanced(&rs, 41, SearchMode::Pruned).unwrap()),
            BatchSize::PerIteration,
        )
    });
    group.finish();
}

criterion_group!(
    benches,
    profile_e8,
    exhaustive_f4,
    pruned_e7,
    pruned_e8_heavy
);
criterion_main!(benches);
