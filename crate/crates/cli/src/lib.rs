//! Command-line driver for the jsum-core verifiers: sweeps over field sizes,
//! single-value queries, caching and report output.

pub mod cache;
pub mod compute;
pub mod config;
pub mod error;
pub mod jobs;
pub mod output;

use std::io::Write;

use clap::{Parser, Subcommand};

use crate::compute::ComputeArgs;
use crate::config::{env_cache_dir, Identity, RunConfig, SweepArgs};
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "jsum",
    version,
    about = "Exact verification of Jacobi-sum determinant identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the selected verifiers over every qualifying q in range.
    Verify(SweepArgs),
    /// Run non-asserting scans (default: sun-scan); always exits 0 on success.
    Scan(SweepArgs),
    /// Print one exact value.
    Compute(ComputeArgs),
}

/// Executes a parsed command, writing results to `out`; returns the exit code.
pub fn run<W: Write>(cli: &Cli, mut out: W) -> Result<i32, CliError> {
    match &cli.command {
        Command::Verify(args) => {
            let cfg = RunConfig::resolve(args, env_cache_dir())?;
            let reports = jobs::run_sweep(&cfg)?;
            output::write_reports(&reports, cfg.format, out)?;
            Ok(if reports.iter().any(|r| r.failed()) {
                1
            } else {
                0
            })
        }
        Command::Scan(args) => {
            let mut args = args.clone();
            args.identities
                .get_or_insert_with(|| vec![Identity::SunScan]);
            let cfg = RunConfig::resolve(&args, env_cache_dir())?;
            let reports = jobs::run_sweep(&cfg)?;
            output::write_reports(&reports, cfg.format, out)?;
            Ok(0)
        }
        Command::Compute(args) => {
            let value = compute::compute(args)?;
            out.write_all(compute::describe(&value).as_bytes())?;
            Ok(0)
        }
    }
}
