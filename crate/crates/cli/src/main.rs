use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "qcover", version, about = "Galois coverings, push-downs and precluster tilting checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Presentation document (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Half-width of the window box on the covering; defaults to 3 * nilbound * (n + 2).
    #[arg(long, global = true, value_name = "W")]
    pub window: Option<i64>,
    /// Total-dimension cap for listing indecomposables.
    #[arg(long, global = true, value_name = "K", default_value_t = 12)]
    pub cap: usize,
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    pub seed: u64,
    /// Write the output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a presentation.
    Validate,
    /// Indecomposables of the covering in the window, one per twist orbit.
    Orbit {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Push down the orbit representatives and match them with the base indecomposables.
    Pushdown {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Indecomposables of the base algebra.
    Indecs,
    /// Run one claim.
    Check {
        #[arg(long)]
        claim: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Run several claims and print a summary line.
    Suite {
        #[arg(long = "claim")]
        claims: Vec<String>,
        #[arg(long, conflicts_with = "claims")]
        all: bool,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Support tau_n-tilting pairs of the base relative to all of its indecomposables.
    EnumerateTilting {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match commands::run(&cli.command, &cli.global) {
        Ok(code) => code,
        Err(err) => {
            let (kind, code) = commands::classify(&err);
            eprintln!("{}", serde_json::json!({ "error": kind, "detail": format!("{err:#}") }));
            code
        }
    };
    ExitCode::from(code as u8)
}
