//! Eigenvalues of a symmetric 3x3 matrix from its characteristic cubic
//! `λ³ − bλ² + cλ + d = 0`, solved in trigonometric form.

use std::f64::consts::PI;

use crate::types::SymMat3;

/// Coefficients of `λ³ − bλ² + cλ + d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicCoeffs {
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CubicCoeffs {
    /// `max(1, ‖A‖_F)` recovered from the coefficients, using
    /// `‖A‖_F² = Σλᵢ² = b² − 2c`.
    pub fn scale(&self) -> f64 {
        (self.b * self.b - 2.0 * self.c).max(0.0).sqrt().max(1.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x - self.b) * x + self.c) * x + self.d
    }
}

/// Invariants of the depressed cubic and the angle `Δ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PQ {
    pub p: f64,
    pub q: f64,
    /// `arccos(q / (2 p^{3/2}))` in `[0, π]`; absent at a triple root.
    pub delta: Option<f64>,
    /// The unclamped arccos argument, kept for diagnostics.
    pub arccos_arg: Option<f64>,
}

impl PQ {
    /// `4p³ − q²`, which is `27·Π(λᵢ − λⱼ)²`.
    pub fn discriminant(&self) -> f64 {
        4.0 * self.p * self.p * self.p - self.q * self.q
    }
}

/// `p` at or below `9·(1e-12·s)²` is a triple root.
pub const TRIPLE_ROOT_EPS: f64 = 1e-12;

pub fn triple_root_threshold(scale: f64) -> f64 {
    let t = TRIPLE_ROOT_EPS * scale;
    9.0 * t * t
}

pub fn char_coeffs(a: &SymMat3) -> CubicCoeffs {
    let (a11, a22, a33) = (a.a11(), a.a22(), a.a33());
    let (a12, a13, a23) = (a.a12(), a.a13(), a.a23());
    CubicCoeffs {
        b: a11 + a22 + a33,
        c: a11 * a22 + a11 * a33 + a22 * a33 - a12 * a12 - a13 * a13 - a23 * a23,
        d: a11 * a23 * a23 + a22 * a13 * a13 + a33 * a12 * a12
            - a11 * a22 * a33
            - 2.0 * a12 * a13 * a23,
    }
}

/// `p = b² − 3c`, `q = 2b³ − 9bc − 27d` and `Δ`.
pub fn compute_pq(coeffs: &CubicCoeffs) -> PQ {
    compute_pq_at_scale(coeffs, coeffs.scale())
}

/// [`compute_pq`] with the triple-root test made against `scale`, for
/// coefficients of a shifted matrix whose own scale is not the one that
/// matters.
pub(crate) fn compute_pq_at_scale(coeffs: &CubicCoeffs, scale: f64) -> PQ {
    let CubicCoeffs { b, c, d } = *coeffs;
    let mut p = b * b - 3.0 * c;
    // p is a sum of squares; small negatives are rounding
    let floor = -1e-12 * (b * b + c.abs()).max(1.0);
    if p < 0.0 && p >= floor {
        p = 0.0;
    }
    let q = 2.0 * b * b * b - 9.0 * b * c - 27.0 * d;
    if p <= triple_root_threshold(scale) {
        return PQ {
            p: p.max(0.0),
            q,
            delta: None,
            arccos_arg: None,
        };
    }
    let arg = q / (2.0 * p * p.sqrt());
    PQ {
        p,
        q,
        delta: Some(arg.clamp(-1.0, 1.0).acos()),
        arccos_arg: Some(arg),
    }
}

/// `p` and `q` written directly in the matrix entries.
pub fn compute_pq_expanded(a: &SymMat3) -> (f64, f64) {
    let (a11, a22, a33) = (a.a11(), a.a22(), a.a33());
    let (a12, a13, a23) = (a.a12(), a.a13(), a.a23());
    let off2 = a12 * a12 + a13 * a13 + a23 * a23;
    let p = 0.5 * ((a11 - a22).powi(2) + (a11 - a33).powi(2) + (a22 - a33).powi(2)) + 3.0 * off2;
    let q = 18.0 * (a11 * a22 * a33 + 3.0 * a12 * a13 * a23)
        + 2.0 * (a11.powi(3) + a22.powi(3) + a33.powi(3))
        + 9.0 * (a11 + a22 + a33) * off2
        - 3.0 * (a11 + a22) * (a11 + a33) * (a22 + a33)
        - 27.0 * (a11 * a23 * a23 + a22 * a13 * a13 + a33 * a12 * a12);
    (p, q)
}

/// The three roots in cosine-placement order: `λ1` uses `Δ/3`, `λ2` uses
/// `(Δ + 2π)/3` and `λ3` uses `(Δ − 2π)/3`. That makes `λ1` the largest,
/// `λ2` the smallest and `λ3` the middle root.
pub fn eigenvalues3(coeffs: &CubicCoeffs, pq: &PQ) -> [f64; 3] {
    let b3 = coeffs.b / 3.0;
    let Some(delta) = pq.delta else {
        return [b3; 3];
    };
    let r = 2.0 * pq.p.sqrt() / 3.0;
    [
        b3 + r * (delta / 3.0).cos(),
        b3 + r * ((delta + 2.0 * PI) / 3.0).cos(),
        b3 + r * ((delta - 2.0 * PI) / 3.0).cos(),
    ]
}
