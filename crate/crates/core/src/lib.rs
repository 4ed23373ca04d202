//! Closed-form diagonalization of 2x2 and 3x3 real symmetric matrices.
//!
//! A symmetric matrix factors as `A = D·Λ·Dᵀ` with `Λ` the eigenvalues and
//! `D` a rotation whose columns are the eigenvectors. In two dimensions `D`
//! is a single planar rotation; in three it is `R1(φ1)·R2(φ2)·R3(φ3)`, a
//! product of rotations about the fixed axes. Both cases are solved with a
//! fixed number of operations: the eigenvalues from the quadratic or the
//! trigonometric form of the cubic, the angles from closed-form expressions
//! in the matrix entries.
//!
//! ```
//! use symdiag::{diagonalize3, SymMat3};
//!
//! let a = SymMat3::new(2.0, 1.0, 3.0, 0.5, -0.25, 0.1).unwrap();
//! let dec = diagonalize3(&a);
//! assert!(dec.report().recon_residual < 1e-10);
//! ```
//!
//! [`oracle`] holds independent reference solvers (Jacobi rotations and
//! bisection on the cubic) used by the test suites and the CLI.

pub mod eig2;
pub mod eig3;
pub mod error;
pub mod oracle;
pub mod rotation;
pub mod types;

pub use eig2::{diagonalize2, eigenvalues2, rotation_angle2, EigenDecomp2};
pub use eig3::{
    diagonalize3, diagonalize3_closed_form, euler_angles, Branch, EigenDecomp3, SolveReport,
};
pub use error::{Error, Result};
pub use rotation::{angle_of, compose_rotation, rot2, rot3x, rot3y, rot3z};
pub use types::{Angles3, Mat, Mat2, Mat3, SymMat2, SymMat3, Vec2};
