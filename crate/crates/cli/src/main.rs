//! `tumatroid`: total unimodularity, regularity and matroid sums from the
//! command line.
//!
//! Exit codes: 0 success, 1 negative verdict or invalid sum, 2 parse or
//! shape error, 3 size guard exceeded.

mod commands;
mod doc;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tumatroid::Execution;

use commands::{GlueArgs, Limits, Report};
use error::CliError;

#[derive(Parser)]
#[command(name = "tumatroid", version, about = "Exact checks for totally unimodular matrices and regular matroid sums")]
struct Cli {
    /// Ignore the size guards.
    #[arg(long, global = true)]
    force: bool,

    /// Run enumerations on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Largest min(rows, cols) the TU checker accepts.
    #[arg(long, global = true, env = "TUMATROID_TU_MAX_DIM")]
    tu_max_dim: Option<usize>,

    /// Largest number of free signs the signing search enumerates.
    #[arg(long, global = true, env = "TUMATROID_SIGN_MAX_FREE")]
    sign_max_free: Option<usize>,

    /// Largest ground set compared exhaustively.
    #[arg(long, global = true, env = "TUMATROID_EQ_MAX_GROUND")]
    eq_max_ground: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Total unimodularity of rational matrices and signings of GF(2) ones.
    Tu {
        #[command(subcommand)]
        command: TuCommand,
    },
    /// 1-, 2- or 3-sum of two GF(2) standard representations.
    Sum(SumArgs),
    /// Regularity of a GF(2) standard representation.
    Regular {
        #[command(subcommand)]
        command: RegularCommand,
    },
    /// Matroid summaries and comparisons.
    Matroid {
        #[command(subcommand)]
        command: MatroidCommand,
    },
    /// End-to-end certificates.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum TuCommand {
    /// Decide total unimodularity; print a violating submatrix otherwise.
    Check { input: PathBuf },
    /// Search for a TU signing of a GF(2) matrix.
    Sign {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct LabelFlags {
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    y: Option<String>,
    #[arg(long)]
    x0: Option<String>,
    #[arg(long)]
    x1: Option<String>,
    #[arg(long)]
    x2: Option<String>,
    #[arg(long)]
    y0: Option<String>,
    #[arg(long)]
    y1: Option<String>,
    #[arg(long)]
    y2: Option<String>,
}

impl LabelFlags {
    fn to_glue(&self) -> GlueArgs {
        GlueArgs {
            x: self.x.clone(),
            y: self.y.clone(),
            x0: self.x0.clone(),
            x1: self.x1.clone(),
            x2: self.x2.clone(),
            y0: self.y0.clone(),
            y1: self.y1.clone(),
            y2: self.y2.clone(),
        }
    }
}

#[derive(Args)]
struct SumArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    k: u8,
    left: PathBuf,
    right: PathBuf,
    #[command(flatten)]
    labels: LabelFlags,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum RegularCommand {
    /// Decide regularity by searching for a TU signing of B.
    Check {
        input: PathBuf,
        /// Write the TU signing here when one exists.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MatroidCommand {
    /// Size, rank and bases.
    Info {
        input: PathBuf,
        /// List the bases only if there are at most this many.
        #[arg(long, default_value_t = 64)]
        max_bases: usize,
    },
    /// Exhaustive equality of two matroids.
    Eq { left: PathBuf, right: PathBuf },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Sign both summands, build the sum and its signing, and check
    /// everything.
    Composition {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        labels: LabelFlags,
        /// Directory for the summand, sum and signing documents.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let execution = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let limits = Limits::new(cli.force, execution, cli.tu_max_dim, cli.sign_max_free, cli.eq_max_ground);
    match cli.command {
        Command::Tu { command: TuCommand::Check { input } } => commands::tu_check(&limits, &input),
        Command::Tu { command: TuCommand::Sign { input, output } } => {
            commands::tu_sign(&limits, &input, output.as_deref())
        }
        Command::Sum(a) => commands::sum(a.k, &a.left, &a.right, &a.labels.to_glue(), a.output.as_deref()),
        Command::Regular { command: RegularCommand::Check { input, witness } } => {
            commands::regular_check(&limits, &input, witness.as_deref())
        }
        Command::Matroid { command: MatroidCommand::Info { input, max_bases } } => {
            commands::matroid_info(&input, max_bases)
        }
        Command::Matroid { command: MatroidCommand::Eq { left, right } } => {
            commands::matroid_eq(&limits, &left, &right)
        }
        Command::Verify {
            command: VerifyCommand::Composition { k, left, right, labels, out_dir },
        } => commands::verify_composition(&limits, k, &left, &right, &labels.to_glue(), out_dir.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let _ = std::io::stdout().write_all(report.stdout.as_bytes());
            ExitCode::from(report.code)
        }
        Err(e) => {
            let kind = if e.exit_code() == 3 { "guard" } else { "error" };
            eprintln!("{kind}: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
