//! `solve` and `verify` over JSON-lines streams.

use std::io::{self, BufRead, Write};

use serde::Serialize;
use symdiag::oracle::{jacobi_eigen, residuals_of, Decomposition, JACOBI_TOL};
use symdiag::{diagonalize2, diagonalize3, Mat};

use crate::record::{ErrorRecord, Exact, Matrix, MatrixRecord, ParseError, ResultRecord};
use crate::CliError;

/// A parsed input line, or why it could not be parsed.
struct Line {
    number: usize,
    id: Option<String>,
    matrix: Result<Matrix, ParseError>,
}

/// Best-effort `id` of a line that failed to parse as a record.
fn salvage_id(text: &str) -> Option<String> {
    let v: serde_json::Value = serde_json::from_str(text).ok()?;
    v.get("id")?.as_str().map(str::to_owned)
}

/// Non-blank lines, numbered from 1 as they appear in the input.
fn read_lines(input: impl BufRead) -> impl Iterator<Item = io::Result<Line>> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()))
        .map(|(i, l)| {
            let text = l?;
            let number = i + 1;
            Ok(match MatrixRecord::parse(&text) {
                Ok(rec) => Line {
                    number,
                    matrix: rec.to_matrix(),
                    id: rec.id,
                },
                Err(e) => Line {
                    number,
                    id: salvage_id(&text),
                    matrix: Err(e),
                },
            })
        })
}

fn write_json(out: &mut impl Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveSummary {
    pub solved: usize,
    pub failed: usize,
}

impl SolveSummary {
    /// 0 if anything was solved (or the input was empty), 2 if every record
    /// failed.
    pub fn exit_code(&self) -> i32 {
        if self.solved == 0 && self.failed > 0 {
            2
        } else {
            0
        }
    }
}

/// One [`ResultRecord`] or [`ErrorRecord`] per non-blank input line, in
/// input order.
pub fn solve(input: impl BufRead, mut output: impl Write) -> Result<SolveSummary, CliError> {
    let mut summary = SolveSummary::default();
    for line in read_lines(input) {
        let line = line?;
        match line.matrix {
            Ok(m) => {
                write_json(&mut output, &ResultRecord::solve(line.number, line.id, &m))?;
                summary.solved += 1;
            }
            Err(e) => {
                let rec = ErrorRecord {
                    line: line.number,
                    id: line.id,
                    error: e.to_string(),
                };
                write_json(&mut output, &rec)?;
                summary.failed += 1;
            }
        }
    }
    output.flush()?;
    Ok(summary)
}

/// Checks made by [`verify`] on one matrix. Every quantity is relative to
/// `max(1, ‖A‖_F)` except `ortho`, which is absolute.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyRecord {
    pub line: usize,
    pub id: Option<String>,
    pub pass: bool,
    /// Largest deviation from the Jacobi eigenvalues, both sorted.
    pub eig_dev: Exact,
    pub recon_rel: Exact,
    pub ortho: Exact,
    pub max_eigvec: Exact,
    pub near_tie: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerifySummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub unparsed: usize,
    pub near_ties: usize,
    pub max_eig_dev: f64,
    pub max_recon_rel: f64,
    pub max_ortho: f64,
    pub max_eigvec: f64,
}

impl VerifySummary {
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 && self.unparsed == 0 {
            0
        } else {
            1
        }
    }
}

/// Deliberate damage applied to every closed-form result before it is
/// checked, so that the checks themselves can be tested.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FaultInjection {
    /// Added to the first eigenvalue.
    pub eigenvalue_shift: f64,
}

struct Measured {
    eig_dev: f64,
    recon_rel: f64,
    ortho: f64,
    max_eigvec: f64,
}

fn measure<const N: usize>(
    a: &Mat<N>,
    d: &Mat<N>,
    mut lambdas: [f64; N],
    fault: FaultInjection,
    oracle: [f64; N],
    scale: f64,
) -> Measured {
    lambdas[0] += fault.eigenvalue_shift;
    let mut sorted = lambdas;
    sorted.sort_by(|a, b| b.total_cmp(a));
    let eig_dev = sorted
        .iter()
        .zip(oracle)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
        / scale;
    let r = residuals_of(a, d, &lambdas);
    Measured {
        eig_dev,
        recon_rel: r.recon_rel,
        ortho: r.ortho,
        max_eigvec: r.max_eigvec(),
    }
}

/// Compares each closed-form decomposition with the Jacobi oracle and its
/// own residuals. A matrix passes when all four measures are at most `tol`.
/// Writes one [`VerifyRecord`] (or [`ErrorRecord`]) per line, then the
/// summary.
pub fn verify(
    input: impl BufRead,
    mut output: impl Write,
    tol: f64,
    fault: FaultInjection,
) -> Result<VerifySummary, CliError> {
    if !(tol > 0.0) {
        return Err(CliError::InvalidTolerance(tol));
    }
    let mut sum = VerifySummary::default();
    for line in read_lines(input) {
        let line = line?;
        sum.total += 1;
        let m = match line.matrix {
            Ok(m) => m,
            Err(e) => {
                sum.unparsed += 1;
                let rec = ErrorRecord {
                    line: line.number,
                    id: line.id,
                    error: e.to_string(),
                };
                write_json(&mut output, &rec)?;
                continue;
            }
        };
        let (m, near_tie) = match m {
            Matrix::Two(a) => {
                let dec = diagonalize2(&a);
                let oracle = jacobi_eigen(&a, JACOBI_TOL)?.sorted_eigenvalues();
                let d = *dec.d();
                let m = measure(&a.to_mat(), &d, dec.eigenvalues(), fault, oracle, a.scale());
                (m, false)
            }
            Matrix::Three(a) => {
                let dec = diagonalize3(&a);
                let oracle = jacobi_eigen(&a, JACOBI_TOL)?.sorted_eigenvalues();
                let m = measure(
                    &a.to_mat(),
                    dec.d(),
                    dec.eigenvalues(),
                    fault,
                    oracle,
                    a.scale(),
                );
                (m, dec.report().near_tie())
            }
        };
        let pass = [m.eig_dev, m.recon_rel, m.ortho, m.max_eigvec]
            .iter()
            .all(|&x| x <= tol);
        if pass {
            sum.passed += 1;
        } else {
            sum.failed += 1;
        }
        sum.near_ties += usize::from(near_tie);
        sum.max_eig_dev = sum.max_eig_dev.max(m.eig_dev);
        sum.max_recon_rel = sum.max_recon_rel.max(m.recon_rel);
        sum.max_ortho = sum.max_ortho.max(m.ortho);
        sum.max_eigvec = sum.max_eigvec.max(m.max_eigvec);
        let rec = VerifyRecord {
            line: line.number,
            id: line.id,
            pass,
            eig_dev: Exact(m.eig_dev),
            recon_rel: Exact(m.recon_rel),
            ortho: Exact(m.ortho),
            max_eigvec: Exact(m.max_eigvec),
            near_tie,
        };
        write_json(&mut output, &rec)?;
    }
    #[derive(Serialize)]
    struct Wrapped<'a> {
        summary: &'a VerifySummary,
    }
    write_json(&mut output, &Wrapped { summary: &sum })?;
    output.flush()?;
    Ok(sum)
}
