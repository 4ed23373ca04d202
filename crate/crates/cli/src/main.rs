use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symdiag_cli::{bench, solve, verify, CliError, FaultInjection};

#[derive(Parser)]
#[command(
    name = "symdiag",
    version,
    about = "Closed-form diagonalization of symmetric 2x2 and 3x3 matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonalize every record of a JSON-lines stream.
    Solve {
        /// Input file; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check every record against the Jacobi oracle.
    Verify {
        #[arg(long)]
        tol: f64,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Shift the first eigenvalue of every result (self-test).
        #[arg(long, hide = true, default_value_t = 0.0)]
        inject_fault: f64,
    },
    /// Time closed form against Jacobi on a seeded random stream.
    Bench {
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn open_input(path: Option<PathBuf>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(io::stdin().lock()),
    })
}

fn open_output(path: Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve { input, output } => {
            let summary = solve(open_input(input)?, open_output(output)?)?;
            Ok(summary.exit_code())
        }
        Command::Verify {
            tol,
            input,
            inject_fault,
        } => {
            let fault = FaultInjection {
                eigenvalue_shift: inject_fault,
            };
            let summary = verify(open_input(input)?, open_output(None)?, tol, fault)?;
            eprintln!(
                "{} of {} passed, {} failed, {} unparsed, {} near ties",
                summary.passed, summary.total, summary.failed, summary.unparsed, summary.near_ties
            );
            Ok(summary.exit_code())
        }
        Command::Bench { n, seed, json } => {
            let report = bench(n as usize, seed);
            if json {
                println!("{}", serde_json::to_string(&report).expect("plain numbers"));
            } else {
                println!("{report}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("symdiag: {e}");
            ExitCode::from(1)
        }
    }
}
