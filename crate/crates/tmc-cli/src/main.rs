//! `tmc` — command-line front end for the Turing-machine toolchain.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "tmc",
    about = "Compile, run, and verify small Turing machines",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLike,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a machine listing on a blank tape.
    Run {
        /// Path to a machine listing.
        machine: std::path::PathBuf,
        /// Maximum number of steps to simulate.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the structural invariants of a machine listing (state count,
    /// start state, halt-transition uniqueness, optional bounded run).
    VerifyZ {
        /// Path to a machine listing.
        listing: std::path::PathBuf,
        /// Also simulate this many steps and require that the machine does
        /// not halt within them.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively search all machines with a given number of states for
    /// the maximum halting step count, proving the rest non-halting.
    Bb {
        /// Number of states to enumerate.
        #[arg(long)]
        k: u32,
        /// Step budget for simulating each machine.
        #[arg(long, default_value_t = 200)]
        budget: u64,
        /// Also write the champion listing to this path.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a native conjecture checker (no Turing machines involved).
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Check that every even number in 4..=max is a sum of two primes.
    Goldbach {
        #[arg(long, default_value_t = 1_000_000)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the Lagarias inequality l(n) < r(n) exactly for n = 1..=max.
    Lagarias {
        #[arg(long, default_value_t = 8)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Demonstrate the order-invariant-graph predicates on small examples.
    Friedman {
        /// Run the worked demonstration.
        #[arg(long)]
        demo: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            machine,
            budget,
            format,
        } => commands::run::execute(&machine, budget, format),
        Command::VerifyZ {
            listing,
            budget,
            format,
        } => commands::verify_z::execute(&listing, budget, format),
        Command::Bb {
            k,
            budget,
            out,
            format,
        } => commands::bb::execute(k, budget, out.as_deref(), format),
        Command::Oracle { which } => match which {
            OracleCommand::Goldbach { max, format } => commands::oracle::goldbach(max, format),
            OracleCommand::Lagarias { max, format } => commands::oracle::lagarias(max, format),
            OracleCommand::Friedman { demo, format } => {
                if !demo {
                    Err("pass --demo to run the demonstration".into())
                } else {
                    commands::oracle::friedman_demo(format)
                }
            }
        },
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
