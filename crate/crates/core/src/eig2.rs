//! Closed-form diagonalization of a real symmetric 2x2 matrix.

use crate::rotation::rot2;
use crate::types::{Mat2, SymMat2};

/// Relative size below which `a11 - a22` and `a12` both count as zero.
pub const DEGENERACY_EPS: f64 = 1e-14;

/// Eigenvalues, rotation angle and eigenvector matrix `D = R(φ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenDecomp2 {
    lambda1: f64,
    lambda2: f64,
    phi: f64,
    d: Mat2,
}

impl EigenDecomp2 {
    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }
    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }
    pub fn eigenvalues(&self) -> [f64; 2] {
        [self.lambda1, self.lambda2]
    }
    /// Rotation angle in `(-π/2, π/2]`.
    pub fn phi(&self) -> f64 {
        self.phi
    }
    /// Eigenvectors as columns.
    pub fn d(&self) -> &Mat2 {
        &self.d
    }
}

/// `sign(x)` with `sign(0) = +1`.
fn sign(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Roots of the characteristic quadratic. `lambda1` carries the
/// `+sign(a11 - a22)` branch, so it is the root paired with `e1` when `φ = 0`.
pub fn eigenvalues2(a: &SymMat2) -> (f64, f64) {
    let diff = a.a11() - a.a22();
    let root = diff.hypot(2.0 * a.a12());
    let tr = a.a11() + a.a22();
    let s = sign(diff);
    (0.5 * (tr + s * root), 0.5 * (tr - s * root))
}

/// `φ = ½·atan2(σ·2a12, σ·(a11 - a22))` with `σ = sign(a11 - a22)`.
///
/// Scaling both arguments by σ keeps `cos 2φ ≥ 0`, which is the branch of the
/// single-argument arctangent that pairs with [`eigenvalues2`]: swapping `a11`
/// and `a22` swaps the eigenvalues and negates φ.
pub fn rotation_angle2(a: &SymMat2) -> f64 {
    let diff = a.a11() - a.a22();
    let scale = a.scale();
    if diff.abs() <= DEGENERACY_EPS * scale && a.a12().abs() <= DEGENERACY_EPS * scale {
        return 0.0;
    }
    let s = sign(diff);
    0.5 * (s * 2.0 * a.a12()).atan2(diff.abs())
}

pub fn diagonalize2(a: &SymMat2) -> EigenDecomp2 {
    let (lambda1, lambda2) = eigenvalues2(a);
    let phi = rotation_angle2(a);
    EigenDecomp2 {
        lambda1,
        lambda2,
        phi,
        d: rot2(phi),
    }
}
