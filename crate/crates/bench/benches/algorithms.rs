use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use setheq_core::instances::random::{random_cnf, random_set_system};
use setheq_core::oracles::{count_satisfying, min_set_cover_dp, subset_sum_decide, SubsetSumMode};
use setheq_core::{Caps, SubsetSumInstance};

const SEED: u64 = 7;

fn set_cover_dp(c: &mut Criterion) {
    let caps = Caps::with_brute(62);
    let mut g = c.benchmark_group("setcover-dp");
    for n in [10usize, 12, 14, 16] {
        let sys = random_set_system(n, 2 * n, 3, SEED).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &sys, |b, sys| {
            b.iter(|| min_set_cover_dp(black_box(sys), &caps).unwrap())
        });
    }
    g.finish();
}

fn cnf_brute(c: &mut Criterion) {
    let caps = Caps::with_brute(62);
    let mut g = c.benchmark_group("cnf-brute");
    for n in [10usize, 12, 14, 16] {
        let f = random_cnf(n, 4 * n, 3, SEED).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| count_satisfying(black_box(f), &caps).unwrap())
        });
    }
    g.finish();
}

fn subset_sum_dp(c: &mut Criterion) {
    let caps = Caps {
        subset_sum_table: 1 << 30,
        ..Caps::default()
    };
    let mut g = c.benchmark_group("subsetsum-dp");
    for bits in [12usize, 14, 16, 18] {
        let items: Vec<u64> = (1..=32u64).map(|i| 2 * (i * 977 % (1 << (bits - 1)))).collect();
        let inst = SubsetSumInstance::from_u64(&items, (1 << bits) - 1).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(bits), &inst, |b, inst| {
            b.iter(|| subset_sum_decide(black_box(inst), SubsetSumMode::Dp, &caps).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, set_cover_dp, cnf_brute, subset_sum_dp);
criterion_main!(benches);
