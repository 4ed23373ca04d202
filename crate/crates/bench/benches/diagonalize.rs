use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion, Throughput};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symdiag::oracle::{jacobi_eigen, JACOBI_TOL};
use symdiag::{diagonalize2, diagonalize3, diagonalize3_closed_form, SymMat2, SymMat3};

const BATCH: usize = 1024;

fn matrices3(seed: u64) -> Vec<SymMat3> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..BATCH)
        .map(|_| {
            let e: [f64; 6] = std::array::from_fn(|_| r.random_range(-1.0..=1.0));
            SymMat3::new(e[0], e[1], e[2], e[3], e[4], e[5]).unwrap()
        })
        .collect()
}

fn matrices2(seed: u64) -> Vec<SymMat2> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..BATCH)
        .map(|_| {
            let e: [f64; 3] = std::array::from_fn(|_| r.random_range(-1.0..=1.0));
            SymMat2::new(e[0], e[1], e[2]).unwrap()
        })
        .collect()
}

macro_rules! each {
    ($ms:expr, $f:expr) => {
        |b: &mut criterion::Bencher| {
            b.iter(|| {
                for a in &$ms {
                    let _ = black_box($f(black_box(a)));
                }
            })
        }
    };
}

fn three_by_three(c: &mut Criterion) {
    let ms = matrices3(42);
    let mut g = c.benchmark_group("3x3");
    g.throughput(Throughput::Elements(BATCH as u64));
    g.bench_function("diagonalize3", each!(ms, diagonalize3));
    g.bench_function(
        "diagonalize3_closed_form",
        each!(ms, diagonalize3_closed_form),
    );
    g.bench_function("jacobi", each!(ms, |a| jacobi_eigen(a, JACOBI_TOL)));
    g.finish();
}

fn two_by_two(c: &mut Criterion) {
    let ms = matrices2(42);
    let mut g = c.benchmark_group("2x2");
    g.throughput(Throughput::Elements(BATCH as u64));
    g.bench_function("diagonalize2", each!(ms, diagonalize2));
    g.bench_function("jacobi", each!(ms, |a| jacobi_eigen(a, JACOBI_TOL)));
    g.finish();
}

criterion_group!(benches, three_by_three, two_by_two);
criterion_main!(benches);
