#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symdiag::rotation::compose_rotation_raw;
use symdiag::{SymMat2, SymMat3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(-1.0..=1.0)
}

pub fn random_sym3(rng: &mut ChaCha8Rng) -> SymMat3 {
    let e: [f64; 6] = std::array::from_fn(|_| unit(rng));
    SymMat3::new(e[0], e[1], e[2], e[3], e[4], e[5]).unwrap()
}

pub fn random_sym2(rng: &mut ChaCha8Rng) -> SymMat2 {
    SymMat2::new(unit(rng), unit(rng), unit(rng)).unwrap()
}

/// Angles uniform on `(-π, π]`.
pub fn random_angles(rng: &mut ChaCha8Rng) -> [f64; 3] {
    std::array::from_fn(|_| PI * unit(rng))
}

/// `R·diag(λ)·Rᵀ` with `R = R1(φ1)·R2(φ2)·R3(φ3)`.
pub fn conjugated(angles: [f64; 3], lambdas: [f64; 3]) -> SymMat3 {
    let [p1, p2, p3] = angles;
    SymMat3::from_rotation(&compose_rotation_raw(p1, p2, p3), &lambdas).unwrap()
}

pub fn sorted_desc<const N: usize>(mut v: [f64; N]) -> [f64; N] {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn max_abs_diff<const N: usize>(a: [f64; N], b: [f64; N]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
