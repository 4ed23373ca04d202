//! Closed-form diagonalization of a real symmetric 3x3 matrix.
//!
//! The eigenvalues come from the trigonometric solution of the characteristic
//! cubic ([`values`]). The eigenvectors are the columns of
//! `D = R1(φ1)·R2(φ2)·R3(φ3)`, with the angles recovered in [`vectors`].
//! Every path through [`diagonalize3`] performs a fixed number of operations.

mod values;
mod vectors;

pub use values::{
    char_coeffs, compute_pq, compute_pq_expanded, eigenvalues3, triple_root_threshold, CubicCoeffs,
    PQ, TRIPLE_ROOT_EPS,
};
pub use vectors::{compute_v, compute_w, degenerate_double, f_vectors, g_vectors, resolve_signs};

use crate::error::{Error, Result};
use crate::rotation::compose_rotation;
use crate::types::{Angles3, Mat3, SymMat3};

/// Squared cosines may overshoot `[0, 1]` by this much before it counts as
/// a misclassified matrix.
pub const CLAMP_EXCURSION: f64 = 1e-9;
/// Wrapped differences closer than this are ties.
pub const TIE_EPS: f64 = 1e-12;
/// Non-equivalent sign combinations closer than this are flagged.
pub const NEAR_TIE_EPS: f64 = 1e-6;
/// `v` at or below this takes the `w = 1` bypass.
pub const V_ZERO: f64 = 1e-12;
/// Eigenvalue gaps below `GAP_EPS·s` are degenerate.
pub const GAP_EPS: f64 = 1e-12;
/// f-vectors with norm at or below `F_EPS·s` are treated as zero.
pub const F_EPS: f64 = 1e-14;
/// `4p³ − q²` at or below `DOUBLE_ROOT_EPS·4p³` is a double root. The ratio
/// is `1 − x²` for the arccos argument `x`, so the test is scale free.
pub const DOUBLE_ROOT_EPS: f64 = 1e-13;
/// Largest relative split of the repeated pair the double-root angle
/// formulas accept.
pub const DOUBLE_SPLIT_EPS: f64 = 1e-6;
/// Pairs closer than `REFINE_GAP_EPS·s` are left out of the angle
/// correction.
pub const REFINE_GAP_EPS: f64 = 1e-8;
/// `|cos φ2|` at or below this skips the angle correction.
pub const GIMBAL_EPS: f64 = 1e-8;
/// Residuals at or below this are not corrected.
pub const REFINE_ABOVE: f64 = 1e-14;

/// A lower eigenvalue pair closer than this fraction of the spread is
/// placed first.
pub const PAIR_REORDER: f64 = 1e-2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Signs attached to `φ2 = ±arccos√v` and `φ3 = ±arccos√w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signs {
    pub phi2: Sign,
    pub phi3: Sign,
}

impl Signs {
    pub const PLUS_PLUS: Signs = Signs {
        phi2: Sign::Plus,
        phi3: Sign::Plus,
    };
    pub const PLUS_MINUS: Signs = Signs {
        phi2: Sign::Plus,
        phi3: Sign::Minus,
    };
    pub const MINUS_PLUS: Signs = Signs {
        phi2: Sign::Minus,
        phi3: Sign::Plus,
    };
    pub const MINUS_MINUS: Signs = Signs {
        phi2: Sign::Minus,
        phi3: Sign::Minus,
    };

    /// Evaluation order, which is also the tie-breaking preference.
    pub const ALL: [Signs; 4] = [
        Signs::PLUS_PLUS,
        Signs::PLUS_MINUS,
        Signs::MINUS_PLUS,
        Signs::MINUS_MINUS,
    ];

    /// Combinations with equal parity describe the same eigenvectors.
    pub(crate) fn parity(self) -> bool {
        self.phi2 == self.phi3
    }

    /// Both signs flipped.
    pub(crate) fn flipped(self) -> Signs {
        let flip = |s| match s {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        Signs {
            phi2: flip(self.phi2),
            phi3: flip(self.phi3),
        }
    }
}

/// One evaluated sign combination.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignCandidate {
    pub signs: Signs,
    /// `φ1` estimated from `f1`/`g1`, if `f1` is usable.
    pub phi1_f1: Option<f64>,
    /// `φ1` estimated from `f2`/`g2`, if `f2` is usable.
    pub phi1_f2: Option<f64>,
    /// Distance between the two estimates modulo π.
    pub wrapped_difference: Option<f64>,
}

impl Default for SignCandidate {
    fn default() -> Self {
        SignCandidate {
            signs: Signs::PLUS_PLUS,
            phi1_f1: None,
            phi1_f2: None,
            wrapped_difference: None,
        }
    }
}

/// Per-matrix diagnostics of the angle extraction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveReport {
    candidates: [SignCandidate; 4],
    len: usize,
    /// Index into [`SolveReport::candidates`] of the combination used.
    pub selected: usize,
    /// Gap between the winning difference and the best combination that is
    /// not an equivalent representation of it.
    pub runner_up_margin: Option<f64>,
    pub f1_norm: f64,
    pub f2_norm: f64,
    /// `‖D·Λ·Dᵀ − A‖_F / max(1, ‖A‖_F)`.
    pub recon_residual: f64,
    /// Why the generic path was abandoned, when it was.
    pub fallback: Option<Error>,
    /// The first-order angle correction lowered the residual and was kept.
    pub refined: bool,
}

impl SolveReport {
    pub(crate) fn new(f1_norm: f64, f2_norm: f64) -> Self {
        SolveReport {
            candidates: [SignCandidate::default(); 4],
            len: 0,
            selected: 0,
            runner_up_margin: None,
            f1_norm,
            f2_norm,
            recon_residual: 0.0,
            fallback: None,
            refined: false,
        }
    }

    pub(crate) fn push(&mut self, c: SignCandidate) {
        self.candidates[self.len] = c;
        self.len += 1;
    }

    pub fn candidates(&self) -> &[SignCandidate] {
        &self.candidates[..self.len]
    }

    /// The signs actually used, `(+, +)` when nothing was evaluated.
    pub fn selected_signs(&self) -> Signs {
        self.candidates()
            .get(self.selected)
            .map_or(Signs::PLUS_PLUS, |c| c.signs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Three distinct eigenvalues.
    Generic,
    /// `p = 0`: all eigenvalues equal, no rotation.
    TripleRoot,
    /// `q² = 4p³ ≠ 0`: two equal eigenvalues, `φ3 = 0`.
    DoubleRoot,
    /// Distinct eigenvalues with `a12 = a13 = 0`; only the `e2`–`e3` plane
    /// rotates.
    AlreadyDiagonal2D,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Generic => "Generic",
            Branch::TripleRoot => "TripleRoot",
            Branch::DoubleRoot => "DoubleRoot",
            Branch::AlreadyDiagonal2D => "AlreadyDiagonal2D",
        }
    }
}

/// `A = D·diag(λ)·Dᵀ` with `D = R1(φ1)·R2(φ2)·R3(φ3)`.
///
/// Eigenvalues are listed in the order the angles refer to: descending on
/// the generic branches, `(λ, λ, λ3)` on the double-root branch.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenDecomp3 {
    lambdas: [f64; 3],
    angles: Angles3,
    d: Mat3,
    branch: Branch,
    report: SolveReport,
}

impl EigenDecomp3 {
    fn new(lambdas: [f64; 3], angles: Angles3, branch: Branch, report: SolveReport) -> Self {
        Self::with_d(lambdas, angles, compose_rotation(&angles), branch, report)
    }

    /// `d` must be the rotation of `angles`.
    fn with_d(
        lambdas: [f64; 3],
        angles: Angles3,
        d: Mat3,
        branch: Branch,
        report: SolveReport,
    ) -> Self {
        EigenDecomp3 {
            lambdas,
            angles,
            d,
            branch,
            report,
        }
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        self.lambdas
    }

    /// Eigenvalues in descending order.
    pub fn sorted_eigenvalues(&self) -> [f64; 3] {
        let mut l = self.lambdas;
        l.sort_by(|a, b| b.total_cmp(a));
        l
    }

    pub fn angles(&self) -> &Angles3 {
        &self.angles
    }

    /// Eigenvectors as columns.
    pub fn d(&self) -> &Mat3 {
        &self.d
    }

    pub fn eigenvector(&self, i: usize) -> [f64; 3] {
        self.d.column(i)
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn report(&self) -> &SolveReport {
        &self.report
    }
}

fn sort_descending(mut l: [f64; 3]) -> [f64; 3] {
    // three compare-exchanges
    if l[0] < l[1] {
        l.swap(0, 1);
    }
    if l[1] < l[2] {
        l.swap(1, 2);
    }
    if l[0] < l[1] {
        l.swap(0, 1);
    }
    l
}

/// Descending order, except that a close lower pair is moved to the front
/// as `[λ2, λ3, λ1]`. The `v` formula divides by `λ2 − λ3` and `φ2` moves
/// the isolated eigenvector, so that gap must not be the small one; a small
/// `λ1 − λ2` only affects `φ3`, which turns within the near-degenerate
/// plane.
fn generic_order(roots: [f64; 3]) -> [f64; 3] {
    let [l1, l2, l3] = sort_descending(roots);
    if l2 - l3 < l1 - l2 && l2 - l3 <= PAIR_REORDER * (l1 - l3) {
        [l2, l3, l1]
    } else {
        [l1, l2, l3]
    }
}

/// Splits three roots into the closest pair (averaged) and the remaining one.
fn merge_closest_pair(l: &[f64; 3]) -> (f64, f64) {
    let gaps = [
        (l[0] - l[1]).abs(),
        (l[1] - l[2]).abs(),
        (l[0] - l[2]).abs(),
    ];
    if gaps[0] <= gaps[1] && gaps[0] <= gaps[2] {
        (0.5 * (l[0] + l[1]), l[2])
    } else if gaps[1] <= gaps[2] {
        (0.5 * (l[1] + l[2]), l[0])
    } else {
        (0.5 * (l[0] + l[2]), l[1])
    }
}

fn triple(l: f64, a: &SymMat3) -> EigenDecomp3 {
    let mut report = SolveReport::new(0.0, 0.0);
    report.recon_residual =
        (Mat3::from_diagonal(&[l; 3]) - a.to_mat()).frobenius_norm() / a.scale();
    EigenDecomp3::new([l; 3], Angles3::ZERO, Branch::TripleRoot, report)
}

fn double(a: &SymMat3, roots: &[f64; 3], mean: f64, excursion: f64) -> EigenDecomp3 {
    let (lambda, lambda3) = merge_closest_pair(roots);
    match vectors::degenerate_double_clamped(a, lambda, lambda3, excursion) {
        Ok((angles, report)) => EigenDecomp3::new(
            [lambda, lambda, lambda3],
            angles,
            Branch::DoubleRoot,
            report,
        ),
        Err(_) => triple(mean, a),
    }
}

fn generic(a: &SymMat3, lambdas: &[f64; 3], excursion: f64, correct: bool) -> Result<EigenDecomp3> {
    let v = vectors::compute_v_clamped(a, lambdas, excursion)?;
    let w = vectors::compute_w_clamped(a, lambdas, v, excursion)?;
    let (mut angles, mut d, mut report) = vectors::resolve(a, lambdas, v, w)?;
    if let Some((better, better_d, residual)) = (correct && report.recon_residual > REFINE_ABOVE)
        .then(|| vectors::refine(a, lambdas, &angles, &d))
        .flatten()
    {
        if residual < report.recon_residual {
            angles = better;
            d = better_d;
            report.recon_residual = residual;
            report.refined = true;
        }
    }
    let branch = if report.f1_norm <= F_EPS * a.scale() {
        Branch::AlreadyDiagonal2D
    } else {
        Branch::Generic
    };
    Ok(EigenDecomp3::with_d(*lambdas, angles, d, branch, report))
}

/// Full closed-form pipeline: coefficients, `p`/`q`, branch classification,
/// then angle extraction for the branch.
///
/// The cubic is formed for `A − (tr A/3)·I`, which has the same `p` and `q`
/// without the cancellation against the mean eigenvalue.
///
/// A generic-branch failure (a degenerate gap or an out-of-domain squared
/// cosine) means the matrix sits near a double root without passing the
/// discriminant test. Both readings are then tried with unrestricted clamping,
/// the generic one with its distinct eigenvalues and the double-root one with
/// the closest pair merged, and the better reconstruction is kept. The
/// original failure is recorded in [`SolveReport::fallback`].
///
/// After sign resolution one first-order angle correction is tried and kept
/// if it lowers the residual (see [`SolveReport::refined`]);
/// [`diagonalize3_closed_form`] leaves it out.
pub fn diagonalize3(a: &SymMat3) -> EigenDecomp3 {
    solve(a, true)
}

/// [`diagonalize3`] without the angle correction: the angles are exactly
/// those of the closed-form equations.
pub fn diagonalize3_closed_form(a: &SymMat3) -> EigenDecomp3 {
    solve(a, false)
}

fn solve(a: &SymMat3, correct: bool) -> EigenDecomp3 {
    let mean = a.trace() / 3.0;
    let coeffs = char_coeffs(&a.shifted(mean));
    let pq = values::compute_pq_at_scale(&coeffs, a.scale());
    if pq.delta.is_none() {
        return triple(mean, a);
    }
    let roots = eigenvalues3(&coeffs, &pq).map(|x| x + mean);
    if pq.discriminant() <= DOUBLE_ROOT_EPS * 4.0 * pq.p * pq.p * pq.p {
        return double(a, &roots, mean, DOUBLE_SPLIT_EPS);
    }
    let lambdas = generic_order(roots);
    let err = match generic(a, &lambdas, CLAMP_EXCURSION, correct) {
        Ok(dec) => return dec,
        Err(e) => e,
    };
    let merged = double(a, &roots, mean, f64::INFINITY);
    let mut dec = match generic(a, &lambdas, f64::INFINITY, correct) {
        Ok(g) if g.report.recon_residual < merged.report.recon_residual => g,
        _ => merged,
    };
    dec.report.fallback = Some(err);
    dec
}

/// Like [`diagonalize3`], for callers holding unvalidated components.
pub fn try_diagonalize3(
    a11: f64,
    a22: f64,
    a33: f64,
    a12: f64,
    a13: f64,
    a23: f64,
) -> Result<EigenDecomp3> {
    Ok(diagonalize3(&SymMat3::new(a11, a22, a33, a12, a13, a23)?))
}

/// The Euler angles of the eigenvectors.
///
/// Rotating about the fixed axes `x`, `y`, `z` by `(φ1, φ2, φ3)` equals the
/// Euler sequence about rotating axes with the same angles in reverse order:
/// first `φ1` about `x`, then `φ2` about the rotated `y'`, then `φ3` about the
/// twice-rotated `z''`. The triple is therefore returned unchanged.
pub fn euler_angles(dec: &EigenDecomp3) -> Angles3 {
    dec.angles
}
