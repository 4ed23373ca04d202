//! Reference implementations used to check the closed-form solvers.
//!
//! Nothing here touches the trigonometric formulas in [`crate::eig3`]: the
//! eigenvalues come from cyclic Jacobi rotations or from bisection on the
//! characteristic cubic. Speed is not a concern.

use crate::eig2::EigenDecomp2;
use crate::eig3::{CubicCoeffs, EigenDecomp3};
use crate::error::{Error, Result};
use crate::types::{norm, Mat, SymMat2, SymMat3};

/// Default convergence tolerance for [`jacobi_eigen`].
pub const JACOBI_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Anything that can be viewed as a dense symmetric `N x N` matrix.
pub trait Symmetric<const N: usize> {
    fn to_dense(&self) -> Mat<N>;
}

impl Symmetric<2> for SymMat2 {
    fn to_dense(&self) -> Mat<2> {
        self.to_mat()
    }
}

impl Symmetric<3> for SymMat3 {
    fn to_dense(&self) -> Mat<3> {
        self.to_mat()
    }
}

impl<const N: usize> Symmetric<N> for Mat<N> {
    fn to_dense(&self) -> Mat<N> {
        *self
    }
}

/// Eigenvalues paired with eigenvector columns.
pub trait Decomposition<const N: usize> {
    fn eigenvalues(&self) -> [f64; N];
    fn eigenvectors(&self) -> Mat<N>;

    fn sorted_eigenvalues(&self) -> [f64; N] {
        let mut l = self.eigenvalues();
        l.sort_by(|a, b| b.total_cmp(a));
        l
    }
}

impl Decomposition<2> for EigenDecomp2 {
    fn eigenvalues(&self) -> [f64; 2] {
        EigenDecomp2::eigenvalues(self)
    }
    fn eigenvectors(&self) -> Mat<2> {
        *self.d()
    }
}

impl Decomposition<3> for EigenDecomp3 {
    fn eigenvalues(&self) -> [f64; 3] {
        EigenDecomp3::eigenvalues(self)
    }
    fn eigenvectors(&self) -> Mat<3> {
        *self.d()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiResult<const N: usize> {
    /// Unsorted, in the order of the eigenvector columns.
    pub eigenvalues: [f64; N],
    pub eigenvectors: Mat<N>,
    pub sweeps: usize,
    /// Root of the squared off-diagonal sum at exit.
    pub offdiag_final: f64,
}

impl<const N: usize> Decomposition<N> for JacobiResult<N> {
    fn eigenvalues(&self) -> [f64; N] {
        self.eigenvalues
    }
    fn eigenvectors(&self) -> Mat<N> {
        self.eigenvectors
    }
}

fn offdiag_sq<const N: usize>(a: &Mat<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a.0[i][j] * a.0[i][j];
            }
        }
    }
    s
}

/// Cyclic-by-row Jacobi eigensolver.
///
/// Sweeps until the squared off-diagonal sum is at most
/// `tol²·max(1, ‖A‖_F²)`.
pub fn jacobi_eigen<const N: usize>(a: &impl Symmetric<N>, tol: f64) -> Result<JacobiResult<N>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut m = a.to_dense();
    let fro = m.frobenius_norm();
    let limit = tol * tol * (fro * fro).max(1.0);
    let mut v = Mat::<N>::identity();
    let mut sweeps = 0;
    loop {
        let off = offdiag_sq(&m);
        if off <= limit {
            return Ok(JacobiResult {
                eigenvalues: std::array::from_fn(|i| m.0[i][i]),
                eigenvectors: v,
                sweeps,
                offdiag_final: off.sqrt(),
            });
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                offdiag: off.sqrt(),
            });
        }
        for p in 0..N {
            for q in p + 1..N {
                let apq = m.0[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m.0[q][q] - m.0[p][p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..N {
                    let (kp, kq) = (m.0[k][p], m.0[k][q]);
                    m.0[k][p] = c * kp - s * kq;
                    m.0[k][q] = s * kp + c * kq;
                }
                for k in 0..N {
                    let (pk, qk) = (m.0[p][k], m.0[q][k]);
                    m.0[p][k] = c * pk - s * qk;
                    m.0[q][k] = s * pk + c * qk;
                }
                m.0[p][q] = 0.0;
                m.0[q][p] = 0.0;
                for k in 0..N {
                    let (kp, kq) = (v.0[k][p], v.0[k][q]);
                    v.0[k][p] = c * kp - s * kq;
                    v.0[k][q] = s * kp + c * kq;
                }
            }
        }
        sweeps += 1;
    }
}

/// Bisects `f` on `[lo, hi]` down to adjacent doubles. `rising` tells which
/// end is negative.
fn bisect(coeffs: &CubicCoeffs, mut lo: f64, mut hi: f64, rising: bool) -> f64 {
    loop {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let below = coeffs.eval(mid) < 0.0;
        if below == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if coeffs.eval(lo).abs() <= coeffs.eval(hi).abs() {
        lo
    } else {
        hi
    }
}

/// Roots of `λ³ − bλ² + cλ + d` by bisection between the critical points.
///
/// Returned in ascending order.
pub fn cubic_roots_reference(coeffs: &CubicCoeffs) -> Result<[f64; 3]> {
    let CubicCoeffs { b, c, d } = *coeffs;
    let poly_scale = (b.abs().powi(3) + c.abs() * b.abs() + d.abs()).max(1.0);
    let tol = 1e-10 * poly_scale;
    // Cauchy bound on the roots of a monic cubic
    let bound = 1.0 + b.abs().max(c.abs()).max(d.abs());

    let disc = b * b - 3.0 * c;
    if disc <= 0.0 {
        // monotone: one real root, which must be triple for a real-rooted cubic
        if disc < -1e-12 * (b * b + c.abs()).max(1.0) {
            let f = coeffs.eval(b / 3.0);
            return Err(Error::ComplexRootsDetected { lo: f, hi: f });
        }
        // bisection only resolves a triple root to the cube root of the
        // rounding error; the inflection point is exact
        return Ok([b / 3.0; 3]);
    }
    let sd = disc.sqrt();
    let (x_max, x_min) = ((b - sd) / 3.0, (b + sd) / 3.0);
    let (f_max, f_min) = (coeffs.eval(x_max), coeffs.eval(x_min));
    if f_max < -tol || f_min > tol {
        return Err(Error::ComplexRootsDetected {
            lo: f_max,
            hi: f_min,
        });
    }
    let r1 = if f_max <= 0.0 {
        x_max
    } else {
        bisect(coeffs, -bound, x_max, true)
    };
    let r2 = if f_max <= 0.0 {
        x_max
    } else if f_min >= 0.0 {
        x_min
    } else {
        bisect(coeffs, x_max, x_min, false)
    };
    let r3 = if f_min >= 0.0 {
        x_min
    } else {
        bisect(coeffs, x_min, bound, true)
    };
    Ok([r1, r2, r3])
}

/// `D·Λ·Dᵀ` as an explicit triple product.
pub fn reconstruct<const N: usize>(d: &Mat<N>, lambdas: &[f64; N]) -> Mat<N> {
    *d * Mat::from_diagonal(lambdas) * d.transpose()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residuals<const N: usize> {
    /// `‖D·Λ·Dᵀ − A‖_F / max(1, ‖A‖_F)`.
    pub recon_rel: f64,
    /// `‖DᵀD − I‖_F`.
    pub ortho: f64,
    /// `‖A·vᵢ − λᵢ·vᵢ‖₂ / max(1, ‖A‖_F)` per column.
    pub eigvec_res: [f64; N],
}

impl<const N: usize> Residuals<N> {
    pub fn max_eigvec(&self) -> f64 {
        self.eigvec_res.iter().copied().fold(0.0, f64::max)
    }
}

pub fn residuals<const N: usize>(
    a: &impl Symmetric<N>,
    dec: &impl Decomposition<N>,
) -> Residuals<N> {
    residuals_of(&a.to_dense(), &dec.eigenvectors(), &dec.eigenvalues())
}

/// [`residuals`] for a bare eigenvector matrix and eigenvalue list.
pub fn residuals_of<const N: usize>(a: &Mat<N>, d: &Mat<N>, lambdas: &[f64; N]) -> Residuals<N> {
    let scale = a.frobenius_norm().max(1.0);
    let recon_rel = (reconstruct(d, lambdas) - *a).frobenius_norm() / scale;
    let ortho = (d.transpose() * *d - Mat::identity()).frobenius_norm();
    let eigvec_res = std::array::from_fn(|i| {
        let v = d.column(i);
        let av = a.mul_vec(&v);
        let r: [f64; N] = std::array::from_fn(|k| av[k] - lambdas[i] * v[k]);
        norm(&r) / scale
    });
    Residuals {
        recon_rel,
        ortho,
        eigvec_res,
    }
}
