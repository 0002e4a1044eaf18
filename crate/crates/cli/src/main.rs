//! `kaluza`: multiply, verify, benchmark and dump Kaluza numbers.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod bench;
mod dump;
mod error;
mod multiply;
mod operand;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "kaluza", version, about = "Kaluza number arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two Kaluza numbers (left * right).
    Multiply {
        /// Left operand: a file path or an inline value.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        /// Right operand: a file path or an inline value.
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
    },
    /// Run every consistency check and print a sectioned report.
    Verify {
        /// Random pairs per mode (integer and real).
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Time the naive and fast engines on seeded random operands.
    Bench {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = bench::Format::Text)]
        format: bench::Format,
    },
    /// Print a table quadrant, multiplication matrix, factor matrices or diagonal.
    Dump {
        #[arg(value_enum)]
        what: dump::Target,
        /// Table quadrant (NW, NE, SW, SE); the whole table when omitted.
        #[arg(long)]
        quadrant: Option<kaluza::Quadrant>,
        /// Right operand b: a file path or an inline value.
        #[arg(long, allow_hyphen_values = true)]
        operand: Option<String>,
        /// For `diagonal`: print the signed c-vector references instead of values.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Naive,
    Fast,
    Both,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Multiply {
            left,
            right,
            engine,
        } => multiply::run(&left, &right, engine, out),
        Command::Verify { trials, seed } => verify::run(trials, seed, out),
        Command::Bench { reps, seed, format } => bench::run(reps, seed, format, out),
        Command::Dump {
            what,
            quadrant,
            operand,
            symbolic,
        } => dump::run(what, quadrant, operand.as_deref(), symbolic, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !matches!(err, CliError::VerificationFailed(_)) {
                eprintln!("error: {err}");
            }
            ExitCode::from(err.exit_code())
        }
    }
}
