//! Rotation angles of the eigenvectors of a symmetric 3x3 matrix.
//!
//! With `D = R1(φ1)·R2(φ2)·R3(φ3)`, the squared cosines `v = cos²φ2` and
//! `w = cos²φ3` follow from the first row of `A`. Their signs and `φ1` come
//! from two vector identities `g1 = R(φ1)·f1` and `g2 = R(2φ1)·f2`, where the
//! `f` vectors hold matrix entries and the `g` vectors hold eigenvalues and
//! angles. The sign combination whose two `φ1` estimates agree is kept.

use std::f64::consts::PI;

use super::{
    Sign, SignCandidate, Signs, SolveReport, CLAMP_EXCURSION, DOUBLE_SPLIT_EPS, F_EPS, GAP_EPS,
    GIMBAL_EPS, NEAR_TIE_EPS, REFINE_GAP_EPS, TIE_EPS, V_ZERO,
};
use crate::error::{Error, Result};
use crate::rotation::{angle_of, compose_rotation};
use crate::types::{angle_distance_mod_pi, Angles3, Mat3, SymMat3, Vec2};

fn require_gap(factor: &'static str, gap: f64, tol: f64) -> Result<()> {
    if gap.abs() < tol {
        Err(Error::DegenerateEigenvalues { factor, gap, tol })
    } else {
        Ok(())
    }
}

/// Clamps a squared cosine into `[0, 1]` when it overshoots by at most
/// `excursion`.
fn clamp_unit(quantity: &'static str, value: f64, excursion: f64) -> Result<f64> {
    if (-excursion..=1.0 + excursion).contains(&value) {
        Ok(value.clamp(0.0, 1.0))
    } else {
        Err(Error::OutOfDomain {
            quantity,
            value,
            lo: 0.0,
            hi: 1.0,
        })
    }
}

/// `v = cos²φ2`.
pub fn compute_v(a: &SymMat3, lambdas: &[f64; 3]) -> Result<f64> {
    compute_v_clamped(a, lambdas, CLAMP_EXCURSION)
}

pub(crate) fn compute_v_clamped(a: &SymMat3, lambdas: &[f64; 3], excursion: f64) -> Result<f64> {
    let [l1, l2, l3] = *lambdas;
    let tol = GAP_EPS * a.scale();
    require_gap("lambda2 - lambda3", l2 - l3, tol)?;
    require_gap("lambda3 - lambda1", l3 - l1, tol)?;
    let a11 = a.a11();
    let num = a.a12() * a.a12() + a.a13() * a.a13() + (a11 - l3) * (a11 + l3 - l1 - l2);
    clamp_unit("v", num / ((l2 - l3) * (l3 - l1)), excursion)
}

/// `w = cos²φ3`; exactly 1 when `v` vanishes.
pub fn compute_w(a: &SymMat3, lambdas: &[f64; 3], v: f64) -> Result<f64> {
    compute_w_clamped(a, lambdas, v, CLAMP_EXCURSION)
}

pub(crate) fn compute_w_clamped(
    a: &SymMat3,
    lambdas: &[f64; 3],
    v: f64,
    excursion: f64,
) -> Result<f64> {
    if v <= V_ZERO {
        return Ok(1.0);
    }
    let [l1, l2, l3] = *lambdas;
    require_gap("lambda1 - lambda2", l1 - l2, GAP_EPS * a.scale())?;
    let num = a.a11() - l3 + (l3 - l2) * v;
    clamp_unit("w", num / ((l1 - l2) * v), excursion)
}

/// `f1 = (a12, −a13)`, `f2 = (a22 − a33, −2·a23)`.
pub fn f_vectors(a: &SymMat3) -> (Vec2, Vec2) {
    (
        Vec2::new(a.a12(), -a.a13()),
        Vec2::new(a.a22() - a.a33(), -2.0 * a.a23()),
    )
}

/// The `g` vectors for one choice of signed angles. `v` and `w` must be the
/// squared cosines of `phi2` and `phi3`.
pub fn g_vectors(lambdas: &[f64; 3], phi2: f64, phi3: f64, v: f64, w: f64) -> (Vec2, Vec2) {
    g_vectors_sc(lambdas, phi2.sin_cos(), phi3.sin_cos(), v, w)
}

/// [`g_vectors`] from `(sin, cos)` of `φ2` and `φ3`.
fn g_vectors_sc(
    lambdas: &[f64; 3],
    (s2, c2): (f64, f64),
    (s3, c3): (f64, f64),
    v: f64,
    w: f64,
) -> (Vec2, Vec2) {
    let [l1, l2, l3] = *lambdas;
    let sin2_phi3 = 2.0 * s3 * c3;
    let g1 = Vec2::new(
        0.5 * (l1 - l2) * c2 * sin2_phi3,
        ((l1 - l2) * w + l2 - l3) * s2 * c2,
    );
    let g2 = Vec2::new(
        (l1 - l2) * (1.0 + (v - 2.0) * w) + (l2 - l3) * v,
        (l1 - l2) * s2 * sin2_phi3,
    );
    (g1, g2)
}

/// `(sin, cos)` of `sign·φ` given those of `φ`.
fn signed(sign: Sign, (s, c): (f64, f64)) -> (f64, f64) {
    (sign.apply(s), c)
}

/// The `g` vectors when `λ1 = λ2 = λ` and `φ3 = 0`.
fn g_vectors_double(lambda: f64, lambda3: f64, (s2, c2): (f64, f64), s: f64) -> (Vec2, Vec2) {
    (
        Vec2::new(0.0, (lambda - lambda3) * s2 * c2),
        Vec2::new((lambda - lambda3) * s, 0.0),
    )
}

/// Directions `(cos ψ, sin ψ)` of the f-vectors that are above tolerance,
/// `ψ1 = angle(f1)`, `ψ2 = angle(f2)`.
struct FAngles {
    f1_norm: f64,
    f2_norm: f64,
    psi1: Option<Vec2>,
    psi2: Option<Vec2>,
}

/// `angle(R(−ψ)·g)` with `u = (cos ψ, sin ψ)`.
fn angle_from(u: Vec2, g: Vec2) -> Option<f64> {
    angle_of(Vec2::new(u.x * g.x + u.y * g.y, u.x * g.y - u.y * g.x)).ok()
}

impl FAngles {
    fn new(a: &SymMat3) -> Self {
        let (f1, f2) = f_vectors(a);
        let tol = F_EPS * a.scale();
        let (n1, n2) = (f1.norm(), f2.norm());
        FAngles {
            f1_norm: n1,
            f2_norm: n2,
            psi1: (n1 > tol).then(|| Vec2::new(f1.x / n1, f1.y / n1)),
            psi2: (n2 > tol).then(|| Vec2::new(f2.x / n2, f2.y / n2)),
        }
    }

    /// `φ1(1) = angle(R(−ψ1)·g1)` and `φ1(2) = ½·angle(R(−ψ2)·g2)`.
    fn candidate(&self, signs: Signs, g1: Vec2, g2: Vec2) -> SignCandidate {
        let phi1_f1 = self.psi1.and_then(|u| angle_from(u, g1));
        let phi1_f2 = self.psi2.and_then(|u| angle_from(u, g2)).map(|x| 0.5 * x);
        Self::with_estimates(signs, phi1_f1, phi1_f2)
    }

    /// The candidate with both signs of `c` flipped. That negates `g1` and
    /// keeps `g2`, so only the `f1` estimate moves, by π.
    fn mirrored(c: &SignCandidate) -> SignCandidate {
        let turn = |p: f64| if p > 0.0 { p - PI } else { p + PI };
        Self::with_estimates(c.signs.flipped(), c.phi1_f1.map(turn), c.phi1_f2)
    }

    fn with_estimates(signs: Signs, phi1_f1: Option<f64>, phi1_f2: Option<f64>) -> SignCandidate {
        let wrapped_difference = match (phi1_f1, phi1_f2) {
            (Some(x), Some(y)) => Some(angle_distance_mod_pi(x, y)),
            _ => None,
        };
        SignCandidate {
            signs,
            phi1_f1,
            phi1_f2,
            wrapped_difference,
        }
    }

    /// `φ1` from the larger f-vector. The estimate from `f2` is only known
    /// modulo π; when `f1` is usable its estimate picks the half turn.
    fn phi1(&self, c: &SignCandidate) -> f64 {
        let from_f2 = |p2: f64| match c.phi1_f1 {
            Some(p1) => p2 + PI * ((p1 - p2) / PI).round(),
            None => p2,
        };
        if self.f1_norm >= self.f2_norm {
            c.phi1_f1.or(c.phi1_f2.map(from_f2)).unwrap_or(0.0)
        } else {
            c.phi1_f2.map(from_f2).or(c.phi1_f1).unwrap_or(0.0)
        }
    }
}

/// Picks the candidate with the smallest wrapped difference, preferring
/// earlier entries on ties. Returns the index and the margin to the best
/// candidate that is not an equivalent representation of the winner.
fn select(candidates: &[SignCandidate]) -> (usize, Option<f64>) {
    let Some(min) = candidates
        .iter()
        .filter_map(|c| c.wrapped_difference)
        .reduce(f64::min)
    else {
        return (0, None);
    };
    let best = candidates
        .iter()
        .position(|c| c.wrapped_difference.is_some_and(|d| d <= min + TIE_EPS))
        .expect("minimum exists");
    // flipping both signs gives the same eigenvectors with φ1 shifted by π
    let pair = candidates[best].signs.parity();
    let margin = candidates
        .iter()
        .filter(|c| c.signs.parity() != pair)
        .filter_map(|c| c.wrapped_difference)
        .reduce(f64::min)
        .map(|d| d - min);
    (best, margin)
}

fn reconstruction_residual(a: &SymMat3, angles: &Angles3, lambdas: &[f64; 3]) -> f64 {
    residual_of(a, &compose_rotation(angles), lambdas)
}

fn residual_of(a: &SymMat3, d: &Mat3, lambdas: &[f64; 3]) -> f64 {
    (d.conjugate_diagonal(lambdas) - a.to_mat()).frobenius_norm() / a.scale()
}

/// Resolves the signs of `φ2 = ±arccos√v`, `φ3 = ±arccos√w` and finds `φ1`.
///
/// All four sign combinations are evaluated. When both f-vectors are usable
/// the combination whose two `φ1` estimates agree best (modulo π) wins;
/// otherwise `(+, +)` is used and `φ1` comes from the usable f-vector.
pub fn resolve_signs(
    a: &SymMat3,
    lambdas: &[f64; 3],
    v: f64,
    w: f64,
) -> Result<(Angles3, SolveReport)> {
    resolve(a, lambdas, v, w).map(|(angles, _, report)| (angles, report))
}

/// [`resolve_signs`], also returning `D`.
pub(crate) fn resolve(
    a: &SymMat3,
    lambdas: &[f64; 3],
    v: f64,
    w: f64,
) -> Result<(Angles3, Mat3, SolveReport)> {
    let fa = FAngles::new(a);
    if fa.psi1.is_none() && fa.psi2.is_none() {
        return Err(Error::BothFVectorsZero);
    }
    let phi2 = v.sqrt().acos();
    let phi3 = w.sqrt().acos();
    let (sc2, sc3) = (phi2.sin_cos(), phi3.sin_cos());

    let evaluate = |signs: Signs| {
        let (g1, g2) = g_vectors_sc(
            lambdas,
            signed(signs.phi2, sc2),
            signed(signs.phi3, sc3),
            v,
            w,
        );
        fa.candidate(signs, g1, g2)
    };
    let pp = evaluate(Signs::PLUS_PLUS);
    let pm = evaluate(Signs::PLUS_MINUS);
    let mut report = SolveReport::new(fa.f1_norm, fa.f2_norm);
    for c in [pp, pm, FAngles::mirrored(&pm), FAngles::mirrored(&pp)] {
        report.push(c);
    }
    debug_assert!(report
        .candidates()
        .iter()
        .zip(Signs::ALL)
        .all(|(c, s)| c.signs == s));
    let (best, margin) = select(report.candidates());
    report.selected = best;
    report.runner_up_margin = margin;

    let chosen = report.candidates()[best];
    let angles = Angles3::new(
        fa.phi1(&chosen),
        chosen.signs.phi2.apply(phi2),
        chosen.signs.phi3.apply(phi3),
    );
    let d = compose_rotation(&angles);
    report.recon_residual = residual_of(a, &d, lambdas);
    Ok((angles, d, report))
}

/// Angles when `λ1 = λ2 = λ`: `φ3 = 0` and only the sign of `φ2` is open.
///
/// `cos²φ2` and `sin²φ2` are the squared first-row components of the
/// eigenvectors, `s = ((A − λ3)²)₁₁/(λ − λ3)²` and
/// `t = ((A − λ)²)₁₁/(λ − λ3)²`. Both are sums of squares, and a small
/// split of the pair only enters them at second order. `s + t` departs from
/// 1 by about the relative split; beyond [`DOUBLE_SPLIT_EPS`] the matrix is
/// not a double root.
pub fn degenerate_double(a: &SymMat3, lambda: f64, lambda3: f64) -> Result<(Angles3, SolveReport)> {
    degenerate_double_clamped(a, lambda, lambda3, DOUBLE_SPLIT_EPS)
}

/// [`degenerate_double`] with a caller-chosen allowance for `|s + t − 1|`.
pub(crate) fn degenerate_double_clamped(
    a: &SymMat3,
    lambda: f64,
    lambda3: f64,
    excursion: f64,
) -> Result<(Angles3, SolveReport)> {
    let gap = lambda - lambda3;
    if gap.abs() < GAP_EPS * a.scale() {
        return Err(Error::NotDoubleRoot { lambda, lambda3 });
    }
    let off = a.a12() * a.a12() + a.a13() * a.a13();
    let gap2 = gap * gap;
    let s = ((a.a11() - lambda3).powi(2) + off) / gap2;
    let t = ((a.a11() - lambda).powi(2) + off) / gap2;
    let total = s + t;
    if (total - 1.0).abs() > excursion {
        return Err(Error::OutOfDomain {
            quantity: "s + t",
            value: total,
            lo: 1.0 - excursion,
            hi: 1.0 + excursion,
        });
    }
    let phi2 = t.sqrt().atan2(s.sqrt());
    let s = s / total;
    let sc2 = phi2.sin_cos();
    let fa = FAngles::new(a);

    let mut report = SolveReport::new(fa.f1_norm, fa.f2_norm);
    for signs in [Signs::PLUS_PLUS, Signs::MINUS_PLUS] {
        let (g1, g2) = g_vectors_double(lambda, lambda3, signed(signs.phi2, sc2), s);
        report.push(fa.candidate(signs, g1, g2));
    }
    let (best, margin) = select(report.candidates());
    report.selected = best;
    report.runner_up_margin = margin;

    let chosen = report.candidates()[best];
    let angles = Angles3::new(fa.phi1(&chosen), chosen.signs.phi2.apply(phi2), 0.0);
    report.recon_residual = reconstruction_residual(a, &angles, &[lambda, lambda, lambda3]);
    Ok((angles, report))
}

/// One first-order correction of the angles, with the `D` and residual it
/// gives.
///
/// The angles come from squared cosines, so an angle near 0 or ±π/2 is only
/// known to about `√ε`-scaled accuracy. With `M = Dᵀ·A·D`, the small
/// rotation `D → D·(I + Ω)`, `Ω_ij = M_ij/(λ_j − λ_i)`, removes the
/// off-diagonal of `M` to first order. Writing `Ω` as the axial vector `ω`,
/// the angle increments solve
/// `ω = δ1·Dᵀe1 + δ2·R3ᵀe2 + δ3·e3`, whose closed form is
/// `δ2 = s3·ωx + c3·ωy`, `c2·δ1 = c3·ωx − s3·ωy`, `δ3 = ωz − s2·δ1`.
///
/// Eigenvalue pairs closer than [`REFINE_GAP_EPS`] are not rotated against
/// each other. Returns `None` at gimbal lock, where `δ1` is undetermined.
pub(crate) fn refine(
    a: &SymMat3,
    lambdas: &[f64; 3],
    angles: &Angles3,
    d: &Mat3,
) -> Option<(Angles3, Mat3, f64)> {
    let [p1, p2, p3] = angles.as_array();
    let (s2, c2) = p2.sin_cos();
    let (s3, c3) = p3.sin_cos();
    if c2.abs() <= GIMBAL_EPS {
        return None;
    }
    let m = (d.transpose() * a.to_mat() * *d).0;
    let tol = REFINE_GAP_EPS * a.scale();
    let omega = |i: usize, j: usize| {
        let gap = lambdas[j] - lambdas[i];
        if gap.abs() <= tol {
            0.0
        } else {
            0.5 * (m[i][j] + m[j][i]) / gap
        }
    };
    let (wx, wy, wz) = (omega(2, 1), omega(0, 2), omega(1, 0));
    let d1 = (c3 * wx - s3 * wy) / c2;
    let d2 = s3 * wx + c3 * wy;
    let d3 = wz - s2 * d1;
    let refined = Angles3::new(p1 + d1, p2 + d2, p3 + d3);
    let d = compose_rotation(&refined);
    Some((refined, d, residual_of(a, &d, lambdas)))
}

impl SolveReport {
    /// Two non-equivalent sign combinations came within `1e-6` of each other
    /// without tying outright.
    pub fn near_tie(&self) -> bool {
        self.runner_up_margin
            .is_some_and(|m| m > TIE_EPS && m <= NEAR_TIE_EPS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::{compose_rotation_raw, rot2, rot3x, rot3y};
    use std::f64::consts::FRAC_PI_2;

    fn conj(phi1: f64, phi2: f64, phi3: f64, l: [f64; 3]) -> SymMat3 {
        SymMat3::from_rotation(&compose_rotation_raw(phi1, phi2, phi3), &l).unwrap()
    }

    #[test]
    fn v_examples() {
        let l = [3.0, 2.0, 1.0];
        let v = compute_v(&SymMat3::diagonal(3.0, 2.0, 1.0).unwrap(), &l).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let a = SymMat3::from_rotation(&rot3y(0.7), &l).unwrap();
        let v = compute_v(&a, &l).unwrap();
        assert!((v - 0.7f64.cos().powi(2)).abs() < 1e-12);
        let a = SymMat3::from_rotation(&rot3y(FRAC_PI_2), &l).unwrap();
        assert!(compute_v(&a, &l).unwrap().abs() < 1e-15);
    }

    #[test]
    fn v_rejects_degenerate_eigenvalues() {
        let a = SymMat3::diagonal(3.0, 2.0, 2.0).unwrap();
        let err = compute_v(&a, &[3.0, 2.0, 2.0]).unwrap_err();
        assert!(matches!(err, Error::DegenerateEigenvalues { .. }));
    }

    #[test]
    fn v_rejects_large_excursion() {
        // eigenvalues inconsistent with the matrix
        let a = SymMat3::new(3.0, 2.0, 1.0, 2.0, 0.0, 0.0).unwrap();
        let err = compute_v(&a, &[3.0, 2.0, 1.0]).unwrap_err();
        assert!(
            matches!(err, Error::OutOfDomain { quantity: "v", .. }),
            "{err:?}"
        );
    }

    #[test]
    fn w_examples() {
        let l = [3.0, 2.0, 1.0];
        let a = SymMat3::diagonal(3.0, 2.0, 1.0).unwrap();
        assert!((compute_w(&a, &l, 1.0).unwrap() - 1.0).abs() < 1e-15);
        // the bypass ignores everything else
        assert_eq!(compute_w(&a, &[1.0, 1.0, 1.0], 0.0), Ok(1.0));
        let a = conj(0.0, 0.5, 0.9, l);
        let v = compute_v(&a, &l).unwrap();
        let w = compute_w(&a, &l, v).unwrap();
        assert!((w - 0.9f64.cos().powi(2)).abs() < 1e-11);
    }

    #[test]
    fn f_vector_examples() {
        let (f1, f2) = f_vectors(&SymMat3::diagonal(4.0, 2.0, 7.0).unwrap());
        assert_eq!((f1, f2), (Vec2::new(0.0, -0.0), Vec2::new(-5.0, -0.0)));
        let a = SymMat3::new(0.0, 5.0, 1.0, 1.0, 2.0, 3.0).unwrap();
        let (f1, f2) = f_vectors(&a);
        assert_eq!((f1, f2), (Vec2::new(1.0, -2.0), Vec2::new(4.0, -6.0)));
    }

    #[test]
    fn g_vector_examples() {
        let l = [3.0, 2.0, 1.0];
        let (g1, g2) = g_vectors(&l, 0.0, 0.0, 1.0, 1.0);
        assert_eq!(g1, Vec2::new(0.0, 0.0));
        assert_eq!(g2, Vec2::new(1.0, 0.0));

        // λ1 = λ2 reduces to the double-root forms
        let (lam, l3, phi2) = (2.0, 0.5, 0.4_f64);
        let s = phi2.cos().powi(2);
        let (g1, g2) = g_vectors(&[lam, lam, l3], phi2, 0.0, s, 1.0);
        let (h1, h2) = g_vectors_double(lam, l3, phi2.sin_cos(), s);
        assert!((g1.x - h1.x).abs() < 1e-15 && (g1.y - h1.y).abs() < 1e-15);
        assert!((g2.x - h2.x).abs() < 1e-15 && (g2.y - h2.y).abs() < 1e-15);
    }

    #[test]
    fn g_norms_match_f_norms_for_true_angles() {
        let l = [2.5, 0.5, -1.5];
        let (p1, p2, p3) = (0.4, -0.7, 1.1);
        let a = conj(p1, p2, p3, l);
        let (f1, f2) = f_vectors(&a);
        let (g1, g2) = g_vectors(&l, p2, p3, p2.cos().powi(2), p3.cos().powi(2));
        assert!((g1.norm() - f1.norm()).abs() < 1e-14);
        assert!((g2.norm() - f2.norm()).abs() < 1e-14);
        // and the rotation identities themselves
        let r1 = rot2(p1) * f1;
        let r2 = rot2(2.0 * p1) * f2;
        assert!((r1.x - g1.x).abs() < 1e-14 && (r1.y - g1.y).abs() < 1e-14);
        assert!((r2.x - g2.x).abs() < 1e-14 && (r2.y - g2.y).abs() < 1e-14);
    }

    #[test]
    fn resolve_signs_round_trip() {
        let l = [3.0, 2.0, 1.0];
        let a = conj(0.3, 0.5, 0.9, l);
        let v = compute_v(&a, &l).unwrap();
        let w = compute_w(&a, &l, v).unwrap();
        let (angles, report) = resolve_signs(&a, &l, v, w).unwrap();
        let expect = Angles3::new(0.3, 0.5, 0.9);
        assert!(angles.max_distance_mod_pi(&expect) < 1e-10, "{angles:?}");
        assert_eq!(report.candidates().len(), 4);
        assert!(report.recon_residual < 1e-14);
        assert!(!report.near_tie());
    }

    #[test]
    fn resolve_signs_negative_angles() {
        let l = [3.0, 2.0, 1.0];
        for (p1, p2, p3) in [
            (-0.3, 0.5, 0.9),
            (0.3, -0.5, 0.9),
            (0.3, 0.5, -0.9),
            (-1.2, -0.2, -0.6),
        ] {
            let a = conj(p1, p2, p3, l);
            let v = compute_v(&a, &l).unwrap();
            let w = compute_w(&a, &l, v).unwrap();
            let (angles, _) = resolve_signs(&a, &l, v, w).unwrap();
            let expect = Angles3::new(p1, p2, p3);
            assert!(
                angles.max_distance_mod_pi(&expect) < 1e-10,
                "{angles:?} vs {expect:?}"
            );
        }
    }

    #[test]
    fn rotation_in_e2_e3_plane_uses_f2() {
        // a12 = a13 = 0: only f2 carries information
        let phi = 0.35;
        let l = [3.0, 2.0, 1.0];
        let a = SymMat3::from_rotation(&rot3x(phi), &l).unwrap();
        let a = SymMat3::new(a.a11(), a.a22(), a.a33(), 0.0, 0.0, a.a23()).unwrap();
        let v = compute_v(&a, &l).unwrap();
        let w = compute_w(&a, &l, v).unwrap();
        let (angles, report) = resolve_signs(&a, &l, v, w).unwrap();
        assert_eq!(report.f1_norm, 0.0);
        let chosen = report.candidates()[report.selected];
        assert_eq!(chosen.signs, Signs::PLUS_PLUS);
        assert!(angle_distance_mod_pi(chosen.phi1_f2.unwrap(), phi) < 1e-14);
        assert!(angle_distance_mod_pi(angles.phi1(), phi) < 1e-14);
        assert!(report.recon_residual < 1e-14);
    }

    #[test]
    fn zero_phi2_has_arbitrary_sign() {
        let l = [3.0, 2.0, 1.0];
        let a = conj(0.6, 0.0, 0.8, l);
        let v = compute_v(&a, &l).unwrap();
        let w = compute_w(&a, &l, v).unwrap();
        let (_, report) = resolve_signs(&a, &l, v, w).unwrap();
        let c = report.candidates();
        // flipping the sign of φ2 alone leaves the agreement unchanged
        let d_pp = c[0].wrapped_difference.unwrap();
        let d_mp = c[2].wrapped_difference.unwrap();
        assert!(d_pp < 1e-7 && d_mp < 1e-7, "{c:?}");
        assert!(report.recon_residual < 1e-10);
    }

    #[test]
    fn mirrored_candidates_match_direct_evaluation() {
        let l = [2.0, 0.5, -1.0];
        let a = conj(0.4, -0.6, 1.2, l);
        let v = compute_v(&a, &l).unwrap();
        let w = compute_w(&a, &l, v).unwrap();
        let (_, report) = resolve_signs(&a, &l, v, w).unwrap();
        let fa = FAngles::new(&a);
        let (p2, p3) = (v.sqrt().acos(), w.sqrt().acos());
        for (c, signs) in report.candidates().iter().zip(Signs::ALL) {
            let (g1, g2) = g_vectors(&l, signs.phi2.apply(p2), signs.phi3.apply(p3), v, w);
            let direct = fa.candidate(signs, g1, g2);
            assert_eq!(c.signs, direct.signs);
            let close = |x: Option<f64>, y: Option<f64>| {
                angle_distance_mod_pi(x.unwrap(), y.unwrap()) < 1e-15
                    && (x.unwrap() - y.unwrap()).abs() < 1.0
            };
            assert!(close(c.phi1_f1, direct.phi1_f1), "{c:?} {direct:?}");
            assert!(close(c.phi1_f2, direct.phi1_f2), "{c:?} {direct:?}");
        }
    }

    #[test]
    fn both_f_vectors_zero_is_reported() {
        let a = SymMat3::diagonal(3.0, 2.0, 2.0).unwrap();
        assert_eq!(
            resolve_signs(&a, &[3.0, 2.0, 1.0], 1.0, 1.0).unwrap_err(),
            Error::BothFVectorsZero
        );
    }

    #[test]
    fn double_root_examples() {
        let (angles, report) =
            degenerate_double(&SymMat3::diagonal(2.0, 2.0, 1.0).unwrap(), 2.0, 1.0).unwrap();
        assert_eq!(angles.as_array(), [0.0, 0.0, 0.0]);
        assert_eq!(report.recon_residual, 0.0);

        let a = SymMat3::from_rotation(&rot3y(0.6), &[2.0, 2.0, 1.0]).unwrap();
        let (angles, report) = degenerate_double(&a, 2.0, 1.0).unwrap();
        assert!((angles.phi2().abs() - 0.6).abs() < 1e-12, "{angles:?}");
        assert_eq!(angles.phi3(), 0.0);
        assert!(report.recon_residual <= 1e-10);

        assert!(matches!(
            degenerate_double(&SymMat3::identity(), 1.0, 1.0),
            Err(Error::NotDoubleRoot { .. })
        ));
    }

    #[test]
    fn double_root_general_orientation() {
        for &(p1, p2) in &[
            (0.3, 0.5),
            (-1.0, 0.2),
            (1.4, -1.3),
            (0.0, 0.0),
            (0.7, FRAC_PI_2 - 1e-4),
        ] {
            let a = conj(p1, p2, 0.37, [-0.5, -0.5, 1.5]);
            let (_, report) = degenerate_double(&a, -0.5, 1.5).unwrap();
            // φ2 near π/2 loses digits in arccos√s
            assert!(
                report.recon_residual <= 1e-11,
                "{p1} {p2}: {}",
                report.recon_residual
            );
        }
    }
}
