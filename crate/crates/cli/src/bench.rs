//! Per-call latency of the closed form against the Jacobi oracle.

use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use symdiag::oracle::{jacobi_eigen, JACOBI_TOL};
use symdiag::{diagonalize3, SymMat3};

/// `n` symmetric matrices with entries uniform in `[-1, 1]`. The stream
/// depends only on `seed`.
pub fn random_matrices(n: usize, seed: u64) -> Vec<SymMat3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut u = || rng.random_range(-1.0..=1.0);
            SymMat3::new(u(), u(), u(), u(), u(), u()).expect("finite")
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Latency {
    pub median_ns: f64,
    pub p99_ns: f64,
    pub total_s: f64,
}

impl Latency {
    fn from_samples(mut ns: Vec<u64>) -> Self {
        let total_s = ns.iter().sum::<u64>() as f64 * 1e-9;
        let at = |ns: &mut Vec<u64>, q: f64| {
            let k = ((ns.len() - 1) as f64 * q).round() as usize;
            *ns.select_nth_unstable(k).1 as f64
        };
        Latency {
            median_ns: at(&mut ns, 0.5),
            p99_ns: at(&mut ns, 0.99),
            total_s,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub seed: u64,
    pub closed_form: Latency,
    pub jacobi: Latency,
    /// Closed-form calls per second over Jacobi calls per second.
    pub throughput_ratio: f64,
}

fn time_each(matrices: &[SymMat3], mut f: impl FnMut(&SymMat3)) -> Latency {
    let samples = matrices
        .iter()
        .map(|a| {
            let t = Instant::now();
            f(black_box(a));
            t.elapsed().as_nanos() as u64
        })
        .collect();
    Latency::from_samples(samples)
}

/// Times every call individually, single-threaded, closed form first.
pub fn bench(n: usize, seed: u64) -> BenchReport {
    assert!(n >= 1, "bench needs at least one matrix");
    let matrices = random_matrices(n, seed);
    let closed_form = time_each(&matrices, |a| {
        black_box(diagonalize3(a));
    });
    let jacobi = time_each(&matrices, |a| {
        black_box(jacobi_eigen(a, JACOBI_TOL).expect("jacobi converges"));
    });
    BenchReport {
        n,
        seed,
        closed_form,
        jacobi,
        throughput_ratio: jacobi.total_s / closed_form.total_s,
    }
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "n = {}, seed = {}", self.n, self.seed)?;
        for (name, l) in [("closed form", self.closed_form), ("jacobi", self.jacobi)] {
            writeln!(
                f,
                "{name:>12}: median {:8.1} ns  p99 {:8.1} ns  total {:.3} s",
                l.median_ns, l.p99_ns, l.total_s
            )?;
        }
        write!(
            f,
            "throughput ratio (closed form / jacobi): {:.2}",
            self.throughput_ratio
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_deterministic() {
        assert_eq!(random_matrices(50, 7), random_matrices(50, 7));
        assert_ne!(random_matrices(5, 7), random_matrices(5, 8));
    }

    #[test]
    fn single_matrix_smoke() {
        let r = bench(1, 3);
        assert_eq!(r.n, 1);
        assert!(r.closed_form.median_ns >= 0.0 && r.jacobi.median_ns >= 0.0);
    }
}
