//! Command-line front end over `wheelecc-core`: `gen` emits exact objects,
//! `verify` checks every closed form at one `n` against the oracles, and
//! `sweep` does the same over a range of `n` in parallel.

pub mod generate;
pub mod render;
pub mod report;
pub mod verify;

use clap::{Args, Parser, Subcommand};

use crate::generate::{generate, Object};
use crate::render::{render_generated, render_report, render_sweep, Format};
use crate::verify::{sweep, verify, VerifyOptions, DEFAULT_MAX_N};

#[derive(Debug, Parser)]
#[command(name = "wheelecc", version, about = "Eccentricity matrices of wheel graphs in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Tolerance for the floating-point spectral radius comparison.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Include per-check wall times (output is then no longer reproducible).
    #[arg(long)]
    pub timings: bool,
    /// Allow n above the default limit of 200.
    #[arg(long)]
    pub max_n_override: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact matrix, vector or edge list.
    Gen {
        #[arg(value_enum)]
        object: Object,
        n: usize,
        /// Output format; may also be given positionally.
        #[arg(value_enum)]
        positional_format: Option<Format>,
        #[arg(long, value_enum, conflicts_with = "positional_format")]
        format: Option<Format>,
    },
    /// Check every applicable closed form at one n against the oracles.
    Verify {
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Verify every n in an inclusive range.
    Sweep {
        n_min: usize,
        n_max: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
}

/// Rendered output plus whether any verification check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

/// A request that cannot be served: bad range, wrong residue class, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn check_limit(n: usize, common: &Common) -> Result<(), UsageError> {
    if n > DEFAULT_MAX_N && !common.max_n_override {
        return Err(UsageError(format!(
            "n = {n} exceeds the default limit of {DEFAULT_MAX_N}; pass --max-n-override to proceed"
        )));
    }
    Ok(())
}

pub fn execute(cli: Cli) -> Result<Output, UsageError> {
    match cli.command {
        Command::Gen {
            object,
            n,
            positional_format,
            format,
        } => {
            let g = generate(object, n).map_err(|e| {
                let name = clap::ValueEnum::to_possible_value(&object)
                    .map(|v| v.get_name().to_string())
                    .unwrap_or_default();
                UsageError(format!("cannot generate {name} for n = {n}: {e}"))
            })?;
            let format = format.or(positional_format).unwrap_or_default();
            Ok(Output {
                text: render_generated(&g, format),
                failed: false,
            })
        }
        Command::Verify { n, common } => {
            check_limit(n, &common)?;
            let opts = VerifyOptions {
                tol: common.tol,
                timings: common.timings,
            };
            let report = verify(n, opts).map_err(|e| UsageError(e.to_string()))?;
            Ok(Output {
                text: render_report(&report, common.format, common.timings),
                failed: !report.passed(),
            })
        }
        Command::Sweep {
            n_min,
            n_max,
            jobs,
            common,
        } => {
            check_limit(n_max, &common)?;
            let opts = VerifyOptions {
                tol: common.tol,
                timings: common.timings,
            };
            let report = sweep(n_min, n_max, jobs, opts).map_err(|e| UsageError(e.to_string()))?;
            Ok(Output {
                text: render_sweep(&report, common.format, common.timings),
                failed: !report.passed(),
            })
        }
    }
}
