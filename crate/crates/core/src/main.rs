use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lincorr::cli::{self, Outcome, ReportFormat, SweepSpec};
use lincorr::SearchConfig;

#[derive(Parser)]
#[command(name = "lincorr", version, about = "Linear-entropy and Hilbert-Schmidt correlations of two-qubit X states")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Correlations, closest states and diagnostics at one point.
    Report {
        #[arg(long)]
        c1: f64,
        #[arg(long)]
        c2: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// CSV sweep along c1 + c2 = alpha.
    Sweep {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Leave the geometric columns empty.
        #[arg(long)]
        linear_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identity checks on random points.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Closed forms against brute-force search.
    Oracle {
        #[arg(long)]
        c1: f64,
        #[arg(long)]
        c2: f64,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { cli::EXIT_USAGE as u8 } else { 0 });
        }
    };
    let out: Outcome = match args.cmd {
        Cmd::Report { c1, c2, format } => cli::cmd_report(c1, c2, format),
        Cmd::Sweep { alpha, steps, linear_only, out } => cli::cmd_sweep(&SweepSpec {
            alpha,
            steps,
            include_geometric: !linear_only,
            output_path: out,
        }),
        Cmd::Verify { samples, seed, tol } => cli::cmd_verify(samples, seed, tol),
        Cmd::Oracle { c1, c2, grid, restarts, seed } => {
            let d = SearchConfig::default();
            let cfg = SearchConfig {
                coarse_grid: grid.unwrap_or(d.coarse_grid),
                restarts: restarts.unwrap_or(d.restarts),
                seed: seed.unwrap_or(d.seed),
                ..d
            };
            cli::cmd_oracle(c1, c2, &cfg)
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
