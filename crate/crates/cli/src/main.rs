use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use weilrep::report::Status;
use weilrep::suites::{run_suite, Backend, SuiteOptions};
use weilrep::table::{emit_table, TableKind};

/// Exact verification of the finite Weil representation of SL2(Z/nZ):
/// DFT proportionality, determinant and character formulas, Gauss-sum
/// evaluations, and quadratic reciprocity, at desk scale.
#[derive(Parser)]
#[command(name = "weilrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite over its parameter grid.
    Verify {
        /// One of: dft, weil, egorov, character, chtau, tensor, qr, jacobi,
        /// gauss-sign, equivariance, group, all.
        #[arg(long)]
        suite: String,
        /// Restrict the grid to a single odd modulus.
        #[arg(long)]
        n: Option<u64>,
        /// Upper bound for prime grids (default 23 where applicable).
        #[arg(long = "primes-up-to")]
        primes_up_to: Option<u64>,
        /// Scalar backend: exact (default) or float.
        #[arg(long, default_value = "exact")]
        backend: String,
        /// Float-backend tolerance override (default 1e-9·n per identity).
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for randomized case selection; recorded in the report.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON report here in addition to stdout output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit a CSV results table.
    Table {
        /// One of: reciprocity, gauss-signs, constants.
        #[arg(long)]
        kind: String,
        /// Largest modulus / prime included.
        #[arg(long, default_value_t = 23)]
        bound: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, n, primes_up_to, backend, tol, seed, json } => {
            let backend = match backend.as_str() {
                "exact" => Backend::Exact,
                "float" => Backend::Float,
                other => {
                    eprintln!("error: unknown backend '{other}' (use exact or float)");
                    return ExitCode::from(2);
                }
            };
            let opts = SuiteOptions { n, primes_up_to, backend, tol, seed };
            let report = match run_suite(&suite, &opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            for check in &report.checks {
                let tag = match check.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skip => "info",
                };
                match (check.status, check.residual) {
                    (Status::Fail, _) => println!(
                        "[{tag}] {}\n       lhs: {}\n       rhs: {}{}",
                        check.id,
                        check.lhs,
                        check.rhs,
                        check
                            .residual
                            .map(|r| format!("\n       residual: {r:.3e}"))
                            .unwrap_or_default()
                    ),
                    (Status::Skip, _) => println!("[{tag}] {} :: {} :: {}", check.id, check.lhs, check.rhs),
                    (_, Some(r)) => println!("[{tag}] {} (residual {r:.3e})", check.id),
                    _ => println!("[{tag}] {}", check.id),
                }
            }
            let (pass, fail, skip) = report.counts();
            println!(
                "suite '{}' [{} backend, seed {}]: {} passed, {} failed, {} recorded; {} ms; status: {}",
                report.suite,
                report.params.backend,
                report.params.seed,
                pass,
                fail,
                skip,
                report.elapsed_ms,
                match report.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "PASS",
                }
            );
            if let Some(path) = json {
                if let Err(e) = std::fs::write(&path, report.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Table { kind, bound, csv } => {
            let kind = match TableKind::parse(&kind) {
                Ok(k) => k,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let out = match emit_table(kind, bound) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match csv {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &out) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{out}"),
            }
            ExitCode::SUCCESS
        }
    }
}
