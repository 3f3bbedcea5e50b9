use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mutwb_core::typea::{self, Triangulation};
use mutwb_core::{generalized_mutate, single_step_t, snf, BigInt, ExchangeMatrix, IntMatrix};

/// Deterministic pseudo-random entries in `[-9, 9]`.
fn filled(rows: usize, cols: usize, seed: u64) -> IntMatrix {
    let mut x = seed;
    let data = (0..rows * cols)
        .map(|_| {
            x = x
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            BigInt::from((x >> 33) as i64 % 19 - 9)
        })
        .collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

fn skew(n: usize, seed: u64) -> ExchangeMatrix {
    let a = filled(n, n, seed);
    let mut b = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = &a[(i, j)] - &a[(j, i)];
        }
    }
    ExchangeMatrix::with_index_labels(b).unwrap()
}

fn bench_snf(c: &mut Criterion) {
    let mut g = c.benchmark_group("snf");
    for n in [4, 8, 16] {
        let a = filled(n, n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| snf(black_box(a)))
        });
    }
    g.finish();
}

fn bench_mutation(c: &mut Criterion) {
    let b8 = skew(8, 1);
    c.bench_function("fz_mutate/8", |b| {
        b.iter(|| black_box(&b8).fz_mutate(3).unwrap())
    });
    c.bench_function("mutate_via_s/8", |b| {
        b.iter(|| black_box(&b8).mutate_via_s(3).unwrap())
    });
    let t = single_step_t(&b8, 3).unwrap();
    c.bench_function("generalized_mutate/8", |b| {
        b.iter(|| generalized_mutate(black_box(&b8), black_box(&t)).unwrap())
    });
}

fn bench_typea(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(20);
    for m in [7, 9, 11] {
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| typea::enumerate(black_box(m)).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("composed_t");
    g.sample_size(20);
    for m in [6, 8, 10] {
        let from = Triangulation::fan(m).unwrap();
        let diagonals: Vec<(usize, usize)> = (1..m - 2).map(|a| (a, m - 1)).collect();
        let to = typea::validate(m, diagonals).unwrap();
        g.bench_with_input(
            BenchmarkId::from_parameter(m),
            &(from, to),
            |b, (from, to)| b.iter(|| typea::composed_t(black_box(from), black_box(to)).unwrap()),
        );
    }
    g.finish();
}

criterion_group!(benches, bench_snf, bench_mutation, bench_typea);
criterion_main!(benches);
