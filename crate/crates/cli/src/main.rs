use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

mod commands;
mod input;
mod report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] cremona_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cremona", version, about = "Polar maps, arrangements and Legendre transform checks in exact arithmetic")]
struct Cli {
    /// Write the full JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report (makes it nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of the polar map of a plane curve.
    CurveDegree {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = cremona_core::polar::DEFAULT_MAX_RETRIES)]
        max_retries: usize,
    },
    /// Decide whether a reduced plane curve has a birational polar map, and which shape it is.
    Classify {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Incidence data and degree formulas for an arrangement file.
    ArrDegree {
        #[arg(long)]
        file: PathBuf,
    },
    /// Sample plane arrangements and report every one with degree one.
    ArrSearch {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of generic, bundle, near-bundle, pencil-through-line, mixed.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<String>>,
    },
    /// Check the Legendre transform identities for a catalog entry.
    LegendreVerify {
        #[arg(long)]
        entry: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Whether F divides its Hessian determinant.
    HessianCheck {
        #[arg(long)]
        poly: String,
        /// Ring size; defaults to the highest variable index plus one.
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Compare the polar degree of a product of powers with that of its reduction.
    ConjectureProbe {
        #[arg(long)]
        factors: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.summary);
            if let Some(path) = &cli.out {
                let elapsed = cli.timings.then(|| start.elapsed().as_millis() as u64);
                if let Err(e) = report::write(path, &outcome, elapsed) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
