//! Batch front end for `symdiag`: JSON-lines in, JSON-lines out.
//!
//! Input lines carry the upper triangle (`a11, a22, a12` or all six
//! components) and an optional `id`. `solve` writes one decomposition per
//! line, `verify` checks each against the Jacobi oracle, `bench` times the
//! closed form against Jacobi on a seeded random stream.

pub mod bench;
pub mod commands;
pub mod record;

pub use bench::{bench, random_matrices, BenchReport};
pub use commands::{solve, verify, FaultInjection, SolveSummary, VerifySummary};
pub use record::{MatrixRecord, ResultRecord};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error(transparent)]
    Solver(#[from] symdiag::Error),
}
