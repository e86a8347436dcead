use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use galois_equiv::cli::{run, Command, Overrides};

#[derive(Parser)]
#[command(name = "galois-equiv", version, about = "Galois-equivariant forms of group representations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Seed for the Hilbert 90 search and random sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Number of Hilbert 90 attempts.
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Coordinates of mu with N(mu) lambda = 1, as "a/b,c/d".
    #[arg(long, global = true, allow_hyphen_values = true)]
    witness: Option<String>,

    /// Replay a given Y instead of searching for one.
    #[arg(long = "replay-Y", global = true, value_name = "FILE")]
    replay_y: Option<PathBuf>,

    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check relations, the automorphism and absolute irreducibility.
    Validate { file: PathBuf },
    /// Compute X and the lambda-invariant.
    Lambda { file: PathBuf },
    /// Construct an equivariant form and write a certificate.
    Equivariant { file: PathBuf },
    /// Build the induced representation and its Schur index.
    Induce { file: PathBuf },
    /// Re-check a certificate written by `equivariant`.
    Verify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, file) = match cli.command {
        Cmd::Validate { file } => (Command::Validate, file),
        Cmd::Lambda { file } => (Command::Lambda, file),
        Cmd::Equivariant { file } => (Command::Equivariant, file),
        Cmd::Induce { file } => (Command::Induce, file),
        Cmd::Verify { file } => (Command::Verify, file),
    };
    let overrides = Overrides { seed: cli.seed, budget: cli.budget, witness: cli.witness, replay_y: cli.replay_y };
    let outcome = run(command, &file, &overrides);
    let text = serde_json::to_string_pretty(&outcome.report).expect("json value");
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text + "\n") {
                eprintln!("galois-equiv: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    if let Some(msg) = outcome.report.get("error").and_then(|v| v.as_str()) {
        eprintln!("galois-equiv: {msg}");
    }
    ExitCode::from(outcome.code as u8)
}
