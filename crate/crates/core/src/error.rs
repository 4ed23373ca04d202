use thiserror::Error;

/// Failures raised by the solvers and oracles.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("non-finite matrix component `{name}` = {value}")]
    NonFiniteInput { name: &'static str, value: f64 },

    #[error("angle of the zero vector is undefined")]
    AngleOfZeroVector,

    #[error("eigenvalue gap {gap:e} in `{factor}` is below tolerance {tol:e}")]
    DegenerateEigenvalues {
        factor: &'static str,
        gap: f64,
        tol: f64,
    },

    /// A squared cosine or arccos argument fell outside its domain by more
    /// than rounding can explain.
    #[error("`{quantity}` = {value} is outside [{lo}, {hi}] beyond rounding")]
    OutOfDomain {
        quantity: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("both f-vectors vanish; the matrix is diagonal with a repeated entry")]
    BothFVectorsZero,

    #[error("repeated eigenvalue {lambda} coincides with {lambda3} (triple root)")]
    NotDoubleRoot { lambda: f64, lambda3: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {offdiag:e})")]
    NoConvergence { sweeps: usize, offdiag: f64 },

    #[error("cubic has complex roots (critical values {lo:e}, {hi:e})")]
    ComplexRootsDetected { lo: f64, hi: f64 },

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
