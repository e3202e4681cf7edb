use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use morita::harness::{load_instance, parse_instance_file, run_suite, Command, LoadError, Options};

#[derive(Parser)]
#[command(name = "morita", about = "Checks bimodule calculus and nerve axioms on finite monoidal categories")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, global = true, default_value_t = 2)]
    max_set_size: usize,
    #[arg(long, global = true, default_value_t = 2)]
    max_dim: usize,
    /// Largest carrier searched for an inverse bimodule.
    #[arg(long, global = true, default_value_t = 4)]
    witness_budget: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 50)]
    tuples: usize,
    #[arg(long, global = true, default_value_t = 20)]
    triangles: usize,
    #[arg(long, global = true, default_value_t = 12)]
    samples: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate every declared entity.
    Validate { file: PathBuf },
    /// Coherence diagrams of the underlying monoidal category.
    Coherence { file: PathBuf },
    /// Sampled identities of the balanced tensor calculus.
    Calculus { file: PathBuf },
    /// Declared and generated cells of the nerve.
    Nerve { file: PathBuf },
    /// Horn filling, thinness and saturation.
    Axioms { file: PathBuf },
    /// Balanced tensors against an independent computation.
    Oracle { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, path) = match cli.command {
        Cmd::Validate { file } => (Command::Validate, file),
        Cmd::Coherence { file } => (Command::Coherence, file),
        Cmd::Calculus { file } => (Command::Calculus, file),
        Cmd::Nerve { file } => (Command::Nerve, file),
        Cmd::Axioms { file } => (Command::Axioms, file),
        Cmd::Oracle { file } => (Command::Oracle, file),
    };
    let opts = Options {
        max_set_size: cli.max_set_size,
        max_dim: cli.max_dim,
        witness_budget: cli.witness_budget,
        seed: cli.seed,
        tuples: cli.tuples,
        triangles: cli.triangles,
        samples: cli.samples,
    };
    let start = Instant::now();
    // `validate` reports every entity, so it must not stop at the first failure.
    let loaded = if cmd == Command::Validate {
        std::fs::read_to_string(&path)
            .map_err(|e| LoadError::Io(path.display().to_string(), e.to_string()))
            .and_then(|t| parse_instance_file(&t))
    } else {
        load_instance(&path)
    };
    let file = match loaded {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if matches!(e, LoadError::Validation { .. }) { 1 } else { 2 });
        }
    };
    let report = run_suite(cmd, &file, &opts);
    println!("{report}");
    eprintln!("elapsed {:.2?}", start.elapsed());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
