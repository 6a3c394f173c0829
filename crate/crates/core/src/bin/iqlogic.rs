use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use iqlogic::cli::{self, Outcome, OutputMode, RunConfig};
use iqlogic::{QuantitySystem, Semantics};

#[derive(Parser)]
#[command(name = "iqlogic", version, about = "Syllogistic deduction with intermediate quantifiers")]
struct Args {
    /// Quantity system: 2 (all, some, no, some_not) or 5 (adds the intermediates)
    #[arg(long, global = true, default_value_t = 5)]
    system: usize,
    /// Threshold f for the finite-model semantics, as P/Q with 1/2 < f < 1
    #[arg(long = "threshold-f", global = true, default_value = "3/4")]
    threshold_f: String,
    /// Largest universe size tried by model search
    #[arg(long, global = true, default_value_t = 5)]
    max_universe: usize,
    /// Abort saturation once the closure grows past this many statements
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    /// Emit one machine-readable record per line
    #[arg(long, global = true)]
    structured: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a knowledge-base file and print each statement's derivation
    Parse { file: PathBuf },
    /// Print the closure of a knowledge base with justifications
    Saturate { file: PathBuf },
    /// Prove a goal from a knowledge base, or look for a countermodel
    Prove { file: PathBuf, goal: String },
    /// Show the operators and chain position of a quantifier
    Square { quantifier: String },
    /// Compare validity and derivability for every mood of a figure
    Moods {
        /// Figure 1..4; all figures when omitted
        #[arg(long)]
        figure: Option<u8>,
    },
}

fn config(args: &Args) -> Result<RunConfig, String> {
    let system = QuantitySystem::with_size(args.system).map_err(|e| e.to_string())?;
    let semantics: Semantics = args.threshold_f.parse().map_err(|e: iqlogic::ModelError| e.to_string())?;
    if args.max_universe == 0 || args.max_universe > iqlogic::models::MAX_UNIVERSE {
        return Err(iqlogic::ModelError::InvalidUniverse(args.max_universe).to_string());
    }
    Ok(RunConfig {
        system,
        semantics,
        max_universe: args.max_universe,
        max_steps: args.max_steps,
        output: if args.structured { OutputMode::Structured } else { OutputMode::Text },
    })
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))
}

fn run(args: &Args) -> Outcome {
    let config = match config(args) {
        Ok(c) => c,
        Err(e) => return Outcome::input_error(e),
    };
    match &args.command {
        Command::Parse { file } => read(file).map_or_else(|e| e, |text| cli::cmd_parse(&text, &config)),
        Command::Saturate { file } => read(file).map_or_else(|e| e, |text| cli::cmd_saturate(&text, &config)),
        Command::Prove { file, goal } => read(file).map_or_else(|e| e, |text| cli::cmd_prove(&text, goal, &config)),
        Command::Square { quantifier } => cli::cmd_square(quantifier, &config),
        Command::Moods { figure } => cli::cmd_moods(*figure, &config),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = run(&args);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
