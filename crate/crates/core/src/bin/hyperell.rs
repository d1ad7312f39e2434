use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperell::cli::{self, Format, Outcome};
use hyperell::config::{ObjectKind, RunConfig};
use hyperell::suites::Suite;
use hyperell::Result;

#[derive(Parser)]
#[command(name = "hyperell", version, about = "Construct and verify the hyperelliptic graded-ring tower")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// JSON run configuration
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build curve, E, K3, Tprime or Wprime and verify every equation
    Construct { object: Option<ObjectKind> },
    /// Run verification suites
    Verify { suites: Vec<Suite> },
    /// Print the covering series, its numerators and their reading
    Hilbert,
    /// Every suite plus the series and the Godeaux sections
    Report,
}

fn run(args: Args) -> Result<Outcome> {
    let mut cfg = match &args.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    match args.command {
        Command::Construct { object } => cli::construct(&cfg, object, args.format),
        Command::Verify { suites } => {
            if !suites.is_empty() {
                cfg.suites = suites;
            }
            cli::verify(&cfg, args.format)
        }
        Command::Hilbert => cli::hilbert(&cfg, args.format),
        Command::Report => cli::report(&cfg, args.format),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let out = args.out.clone();
    match run(args) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(outcome) => {
            match &out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.output) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.output),
            }
            if let Some(f) = outcome.failure.as_ref().filter(|_| !outcome.passed) {
                eprintln!("{f}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
    }
}
