mod bench;
mod input;
mod reduce;
mod report;
mod solve;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use setheq_core::oracles::CAP_ENV_VAR;
use setheq_core::{Caps, Error};

/// Reductions, exact solvers and contract checks for CNF-Sat, Hitting Set,
/// Set Cover and related problems.
#[derive(Parser, Debug)]
#[command(name = "setheq", version)]
struct Cli {
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest instance dimension the exhaustive solvers accept.
    #[arg(long, global = true, env = CAP_ENV_VAR)]
    cap: Option<usize>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a reduction to an instance file.
    Reduce(reduce::ReduceArgs),
    /// Count, take the parity of, or decide an instance.
    Solve(solve::SolveArgs),
    /// Run a seeded verification suite.
    Verify(verify::VerifyArgs),
    /// Fit the growth exponent of a solver over a size sweep.
    Bench(bench::BenchArgs),
}

/// Shared settings for subcommands.
pub struct Context {
    pub seed: u64,
    pub caps: Caps,
    pub format: Format,
}

/// Successful command result, mapped to the exit status.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Pass, YES or odd.
    Yes,
    /// Fail, NO or even.
    No,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Capacity { .. }) => 3,
        Some(Error::TriviallyNo(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ctx = Context {
        seed: cli.seed,
        caps: cli.cap.map(Caps::with_brute).unwrap_or_default(),
        format: cli.format,
    };
    let result = match cli.command {
        Command::Reduce(args) => reduce::run(&ctx, args),
        Command::Solve(args) => solve::run(&ctx, args),
        Command::Verify(args) => verify::run(&ctx, args),
        Command::Bench(args) => bench::run(&ctx, args),
    };
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
