use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use twistcheck_cli::{execute, load_spec, Command, LoadError, Outcome, RunOptions};

#[derive(Parser)]
#[command(name = "twistcheck", version, about = "Exact checks for Hopf algebras, YD algebras, twists and bialgebroids")]
struct Cli {
    /// JSON specification file.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for column-parallel checks.
    #[arg(long, global = true)]
    parallel: Option<usize>,
    /// Seed for the sampled representative-independence check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn render(outcome: &Outcome, format: Format) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(outcome).expect("reports serialize")),
        Format::Text => outcome
            .reports
            .iter()
            .try_for_each(|r| write!(out, "{r}"))
            .and_then(|_| writeln!(out, "{}", if outcome.passed { "ALL PASSED" } else { "FAILED" })),
    };
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.parallel {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let Some(path) = cli.spec.as_ref() else {
        eprintln!("error: --spec <path> is required");
        return ExitCode::from(2);
    };
    let loaded = match load_spec(path) {
        Ok(l) => l,
        Err(LoadError::Certification { name, report }) => {
            eprintln!("error: object `{name}` failed certification");
            render(&Outcome::new(command_line, vec![*report]), cli.format);
            return ExitCode::from(1);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    eprintln!("running {command_line}");
    let reports = match execute(&loaded, &cli.command, RunOptions { seed: cli.seed }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    eprintln!("finished in {:.2?}", start.elapsed());
    let outcome = Outcome::new(command_line, reports);
    render(&outcome, cli.format);
    ExitCode::from(if outcome.passed { 0 } else { 1 })
}
