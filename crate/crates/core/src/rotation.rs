//! Rotation matrices about fixed axes and the planar angle of a vector.

use crate::error::{Error, Result};
use crate::types::{Angles3, Mat, Mat2, Mat3, Vec2};

/// Anti-clockwise planar rotation `[[cos φ, -sin φ], [sin φ, cos φ]]`.
pub fn rot2(phi: f64) -> Mat2 {
    let (s, c) = phi.sin_cos();
    Mat([[c, -s], [s, c]])
}

/// Rotation about the fixed `e1` axis.
pub fn rot3x(phi: f64) -> Mat3 {
    let (s, c) = phi.sin_cos();
    Mat([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
}

/// Rotation about the fixed `e2` axis. Note `+sin φ` sits in the upper right.
pub fn rot3y(phi: f64) -> Mat3 {
    let (s, c) = phi.sin_cos();
    Mat([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
}

/// Rotation about the fixed `e3` axis.
pub fn rot3z(phi: f64) -> Mat3 {
    let (s, c) = phi.sin_cos();
    Mat([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

/// `R1(φ1) · R2(φ2) · R3(φ3)`, in exactly that order.
pub fn compose_rotation(angles: &Angles3) -> Mat3 {
    compose_rotation_raw(angles.phi1(), angles.phi2(), angles.phi3())
}

/// [`compose_rotation`] for angles that have not been normalized.
pub fn compose_rotation_raw(phi1: f64, phi2: f64, phi3: f64) -> Mat3 {
    rot3x(phi1) * rot3y(phi2) * rot3z(phi3)
}

/// Anti-clockwise angle of `r` from the positive x-axis, in `(-π, π]`.
pub fn angle_of(r: Vec2) -> Result<f64> {
    if r.x == 0.0 && r.y == 0.0 {
        return Err(Error::AngleOfZeroVector);
    }
    let a = r.y.atan2(r.x);
    // atan2(-0.0, x<0) yields -π
    Ok(if a == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    })
}
