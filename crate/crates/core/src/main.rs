use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use strata_forge::cli::{corpus, exit_code, run, Command, FixtureFile, Options};
use strata_forge::covers::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "strata-forge", version, about = "Projective covers and presentations for glued module categories")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Enumeration work cap (default: $STRATA_FORGE_BUDGET or 2000000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Cross-check every constructed cover against the direct projective.
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    oracle: Switch,
    /// Print nothing; only the exit status reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    /// Run over F_p instead of the fixture's own field.
    #[arg(long, global = true)]
    prime: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the invariant suite on a fixture.
    Check { fixture: String },
    /// Construct the projective covers of all simples.
    Covers { fixture: String },
    /// Recover a quiver presentation from the covers.
    Present { fixture: String },
    /// Ext-quiver of the simples with its quadratic relations.
    Extquiver { fixture: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

/// A path to a fixture file, or the name of a built-in one.
fn load(name: &str) -> strata_forge::Result<FixtureFile> {
    match corpus::get(name) {
        Some(fx) if !std::path::Path::new(name).exists() => Ok(fx),
        _ => FixtureFile::load(name),
    }
}

fn default_budget() -> Result<u64, String> {
    match std::env::var("STRATA_FORGE_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| format!("STRATA_FORGE_BUDGET is not an integer: '{v}'")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (command, fixture) = match &args.command {
        Cmd::Check { fixture } => (Command::Check, fixture),
        Cmd::Covers { fixture } => (Command::Covers, fixture),
        Cmd::Present { fixture } => (Command::Present, fixture),
        Cmd::Extquiver { fixture } => (Command::ExtQuiver, fixture),
    };
    let budget = match args.budget.map(Ok).unwrap_or_else(default_budget) {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let opts = Options { budget, oracle: args.oracle == Switch::On, prime: args.prime };
    let start = Instant::now();
    let outcome = load(fixture).and_then(|fx| run(command, &fx, &opts));
    let report = match outcome {
        Ok(r) => r,
        Err(e) => {
            if !args.quiet {
                eprintln!("error: {e}");
            }
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    if !args.quiet {
        let text = match args.report {
            Format::Text => report.to_text(),
            Format::Json => report.to_json(),
        };
        print!("{text}");
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
