//! `normgraph` command-line front end.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict or a
//! violated ceiling, 2 budget exhausted, 64 usage or parse error.

mod commands;
mod hunt;
mod lemma;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::CliError;

#[derive(Parser)]
#[command(name = "normgraph", version, about = "Normal graphs, star coverings and random-graph experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide normality; on Normal the verdict carries a certificate.
    Check(CheckArgs),
    /// Verify a certificate file against a graph.
    Verify(VerifyArgs),
    /// Reduce a certificate of a triangle-free graph to a star covering.
    Star(StarArgs),
    /// Sample one G(n, p) graph.
    Sample(SampleArgs),
    /// Run a randomized verification suite.
    Lemma(Box<lemma::LemmaArgs>),
    /// Search a corpus or random graphs for non-normal graphs.
    Hunt(hunt::HuntArgs),
}

#[derive(Args, Clone, Debug)]
pub struct GraphInput {
    /// Graph file; `.g6` is graph6, `.el`/`.txt` an edge list.
    #[arg(long)]
    pub graph: PathBuf,
    /// Overrides the format implied by the extension.
    #[arg(long, value_parser = ["g6", "el"])]
    pub format: Option<String>,
}

#[derive(Args, Clone, Debug)]
pub struct BudgetArgs {
    /// Search-node limit; 0 removes it.
    #[arg(long, default_value_t = 5_000_000)]
    pub budget_nodes: u64,
    /// Wall-clock limit in milliseconds.
    #[arg(long)]
    pub budget_ms: Option<u64>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: GraphInput,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Also write the certificate alone to this file when Normal.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    cert: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StarArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Certificate to reduce; when absent one is found first.
    #[arg(long)]
    cert: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "exponent", required_unless_present = "exponent")]
    p: Option<f64>,
    /// Use p = n^-exponent, so the average degree is about n^(1 - exponent).
    #[arg(long)]
    exponent: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Generator stream; the same stream a suite uses for that trial.
    #[arg(long, default_value_t = 0)]
    trial: u64,
    #[arg(long, value_parser = ["g6", "el"], default_value = "g6")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Check(a) => commands::check(&a.input, &a.budget, a.cert_out.as_deref(), a.out.as_deref()),
        Command::Verify(a) => commands::verify(&a.input, &a.cert, a.out.as_deref()),
        Command::Star(a) => commands::star(&a.input, a.cert.as_deref(), &a.budget, a.out.as_deref()),
        Command::Sample(a) => commands::sample(&a),
        Command::Lemma(a) => lemma::run(&a),
        Command::Hunt(a) => hunt::run(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
