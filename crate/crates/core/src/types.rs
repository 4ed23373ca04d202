//! Dense fixed-size matrices, symmetric inputs, 2-vectors and angle triples.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Row-major dense `N x N` matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat<const N: usize>(pub [[f64; N]; N]);

pub type Mat2 = Mat<2>;
pub type Mat3 = Mat<3>;

impl<const N: usize> Mat<N> {
    pub const ZERO: Self = Mat([[0.0; N]; N]);

    pub fn identity() -> Self {
        Self::from_diagonal(&[1.0; N])
    }

    pub fn from_diagonal(diag: &[f64; N]) -> Self {
        let mut m = Self::ZERO;
        for (i, &x) in diag.iter().enumerate() {
            m.0[i][i] = x;
        }
        m
    }

    pub fn from_columns(cols: &[[f64; N]; N]) -> Self {
        let mut m = Self::ZERO;
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m.0[i][j] = x;
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row][col]
    }

    pub fn column(&self, j: usize) -> [f64; N] {
        std::array::from_fn(|i| self.0[i][j])
    }

    pub fn columns(&self) -> [[f64; N]; N] {
        std::array::from_fn(|j| self.column(j))
    }

    pub fn transpose(&self) -> Self {
        Mat(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i])
        }))
    }

    pub fn trace(&self) -> f64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &[f64; N]) -> [f64; N] {
        std::array::from_fn(|i| (0..N).map(|k| self.0[i][k] * v[k]).sum())
    }

    /// `self · diag(lambdas) · selfᵀ`.
    pub fn conjugate_diagonal(&self, lambdas: &[f64; N]) -> Self {
        let mut out = Self::ZERO;
        for i in 0..N {
            for j in i..N {
                let x: f64 = (0..N)
                    .map(|k| self.0[i][k] * lambdas[k] * self.0[j][k])
                    .sum();
                out.0[i][j] = x;
                out.0[j][i] = x;
            }
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }
}

impl<const N: usize> Default for Mat<N> {
    fn default() -> Self {
        Self::ZERO
    }
}

impl<const N: usize> Mul for Mat<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Mat(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
        }))
    }
}

impl<const N: usize> Add for Mat<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Mat(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])
        }))
    }
}

impl<const N: usize> Sub for Mat<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Mat(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] - rhs.0[i][j])
        }))
    }
}

/// Euclidean norm of a fixed-size vector.
pub fn norm<const N: usize>(v: &[f64; N]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// A 2-component vector.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;

    fn mul(self, v: Vec2) -> Vec2 {
        Vec2::new(
            self.0[0][0] * v.x + self.0[0][1] * v.y,
            self.0[1][0] * v.x + self.0[1][1] * v.y,
        )
    }
}

impl Neg for Vec2 {
    type Output = Vec2;

    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteInput { name, value })
    }
}

/// A real symmetric 2x2 matrix stored by its unique components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymMat2 {
    a11: f64,
    a22: f64,
    a12: f64,
}

impl SymMat2 {
    pub fn new(a11: f64, a22: f64, a12: f64) -> Result<Self> {
        Ok(SymMat2 {
            a11: check_finite("a11", a11)?,
            a22: check_finite("a22", a22)?,
            a12: check_finite("a12", a12)?,
        })
    }

    pub fn a11(&self) -> f64 {
        self.a11
    }
    pub fn a22(&self) -> f64 {
        self.a22
    }
    pub fn a12(&self) -> f64 {
        self.a12
    }

    /// The matrix with `a11` and `a22` interchanged.
    pub fn swapped(&self) -> Self {
        SymMat2 {
            a11: self.a22,
            a22: self.a11,
            a12: self.a12,
        }
    }

    pub fn to_mat(&self) -> Mat2 {
        Mat([[self.a11, self.a12], [self.a12, self.a22]])
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a12
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.a11 * self.a11 + self.a22 * self.a22 + 2.0 * self.a12 * self.a12).sqrt()
    }

    /// `max(1, ‖A‖_F)`, the scale used by every relative tolerance.
    pub fn scale(&self) -> f64 {
        self.frobenius_norm().max(1.0)
    }
}

/// A real symmetric 3x3 matrix stored by its six unique components.
///
/// The lower triangle mirrors the upper one: `a21 = a12`, `a31 = a13`,
/// `a32 = a23`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymMat3 {
    a11: f64,
    a22: f64,
    a33: f64,
    a12: f64,
    a13: f64,
    a23: f64,
}

impl SymMat3 {
    pub fn new(a11: f64, a22: f64, a33: f64, a12: f64, a13: f64, a23: f64) -> Result<Self> {
        Ok(SymMat3 {
            a11: check_finite("a11", a11)?,
            a22: check_finite("a22", a22)?,
            a33: check_finite("a33", a33)?,
            a12: check_finite("a12", a12)?,
            a13: check_finite("a13", a13)?,
            a23: check_finite("a23", a23)?,
        })
    }

    pub fn diagonal(a11: f64, a22: f64, a33: f64) -> Result<Self> {
        Self::new(a11, a22, a33, 0.0, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        SymMat3 {
            a11: 1.0,
            a22: 1.0,
            a33: 1.0,
            a12: 0.0,
            a13: 0.0,
            a23: 0.0,
        }
    }

    /// Symmetrizes a dense matrix by averaging mirrored entries.
    pub fn from_mat(m: &Mat3) -> Result<Self> {
        let m = &m.0;
        Self::new(
            m[0][0],
            m[1][1],
            m[2][2],
            0.5 * (m[0][1] + m[1][0]),
            0.5 * (m[0][2] + m[2][0]),
            0.5 * (m[1][2] + m[2][1]),
        )
    }

    /// `R · diag(lambdas) · Rᵀ`, symmetrized.
    pub fn from_rotation(r: &Mat3, lambdas: &[f64; 3]) -> Result<Self> {
        Self::from_mat(&r.conjugate_diagonal(lambdas))
    }

    pub fn a11(&self) -> f64 {
        self.a11
    }
    pub fn a22(&self) -> f64 {
        self.a22
    }
    pub fn a33(&self) -> f64 {
        self.a33
    }
    pub fn a12(&self) -> f64 {
        self.a12
    }
    pub fn a13(&self) -> f64 {
        self.a13
    }
    pub fn a23(&self) -> f64 {
        self.a23
    }

    /// `A − t·I`.
    pub fn shifted(&self, t: f64) -> Self {
        SymMat3 {
            a11: self.a11 - t,
            a22: self.a22 - t,
            a33: self.a33 - t,
            ..*self
        }
    }

    pub fn to_mat(&self) -> Mat3 {
        Mat([
            [self.a11, self.a12, self.a13],
            [self.a12, self.a22, self.a23],
            [self.a13, self.a23, self.a33],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22 + self.a33
    }

    pub fn det(&self) -> f64 {
        self.a11 * (self.a22 * self.a33 - self.a23 * self.a23)
            - self.a12 * (self.a12 * self.a33 - self.a23 * self.a13)
            + self.a13 * (self.a12 * self.a23 - self.a22 * self.a13)
    }

    pub fn frobenius_norm(&self) -> f64 {
        let diag = self.a11 * self.a11 + self.a22 * self.a22 + self.a33 * self.a33;
        let off = self.a12 * self.a12 + self.a13 * self.a13 + self.a23 * self.a23;
        (diag + 2.0 * off).sqrt()
    }

    /// `max(1, ‖A‖_F)`, the scale used by every relative tolerance.
    pub fn scale(&self) -> f64 {
        self.frobenius_norm().max(1.0)
    }
}

/// Wraps an angle into the half-open interval `(-π, π]`.
pub fn wrap_pi(angle: f64) -> f64 {
    let r = (angle + PI).rem_euclid(2.0 * PI) - PI;
    if r <= -PI {
        r + 2.0 * PI
    } else {
        r
    }
}

/// Wraps an angle into `(-π/2, π/2]`, returning the number of half turns
/// that were removed.
fn wrap_half_pi_counted(angle: f64) -> (f64, i64) {
    let k = ((angle - FRAC_PI_2) / PI).ceil();
    let mut r = angle - k * PI;
    let mut k = k as i64;
    // rounding at the interval ends
    if r <= -FRAC_PI_2 {
        r += PI;
        k -= 1;
    } else if r > FRAC_PI_2 {
        r -= PI;
        k += 1;
    }
    (r, k)
}

/// Wraps an angle into `(-π/2, π/2]`.
pub fn wrap_half_pi(angle: f64) -> f64 {
    wrap_half_pi_counted(angle).0
}

/// Distance between two angles on the circle of period π.
pub fn angle_distance_mod_pi(a: f64, b: f64) -> f64 {
    let d = a - b;
    (d - PI * (d / PI).round()).abs()
}

/// The rotation angles `(φ1, φ2, φ3)` of `D = R1(φ1)·R2(φ2)·R3(φ3)`.
///
/// The same triple is the anti-clockwise Euler sequence about rotating axes
/// applied in reverse order (z'', then y', then x).
///
/// Each angle is kept in `(-π/2, π/2]`. Shifting an angle by π changes the
/// rotation by more than column signs unless the later angles are negated:
/// `(φ1 + π, φ2, φ3) ≅ (φ1, -φ2, -φ3)` and `(φ1, φ2 + π, φ3) ≅ (φ1, φ2, -φ3)`.
/// [`Angles3::new`] applies those compensations, so the normalized triple
/// describes the same set of eigenvectors up to sign.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Angles3 {
    phi1: f64,
    phi2: f64,
    phi3: f64,
}

impl Angles3 {
    pub const ZERO: Self = Angles3 {
        phi1: 0.0,
        phi2: 0.0,
        phi3: 0.0,
    };

    pub fn new(phi1: f64, phi2: f64, phi3: f64) -> Self {
        let (phi1, k1) = wrap_half_pi_counted(phi1);
        let (phi2, phi3) = if k1 % 2 != 0 {
            (-phi2, -phi3)
        } else {
            (phi2, phi3)
        };
        let (phi2, k2) = wrap_half_pi_counted(phi2);
        let phi3 = if k2 % 2 != 0 { -phi3 } else { phi3 };
        let phi3 = wrap_half_pi(phi3);
        Angles3 { phi1, phi2, phi3 }
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }
    pub fn phi2(&self) -> f64 {
        self.phi2
    }
    pub fn phi3(&self) -> f64 {
        self.phi3
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.phi1, self.phi2, self.phi3]
    }

    /// Largest per-angle distance modulo π.
    pub fn max_distance_mod_pi(&self, other: &Angles3) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(&a, b)| angle_distance_mod_pi(a, b))
            .fold(0.0, f64::max)
    }
}
