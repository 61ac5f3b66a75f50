use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Duration;

use normgraph::io::{read_graphs, Format};
use normgraph::normality::Budget;
use normgraph::Graph;
use serde::Serialize;

use crate::{BudgetArgs, GraphInput};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<normgraph::Error> for CliError {
    fn from(e: normgraph::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

pub type CliResult<T = u8> = Result<T, CliError>;

/// Prints the effective configuration as one JSON line on stderr.
pub fn header<T: Serialize>(command: &str, config: &T) -> CliResult<()> {
    eprintln!("# normgraph {command} {}", serde_json::to_string(config)?);
    Ok(())
}

pub fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => write_json(value, path),
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            serde_json::to_writer_pretty(&mut w, value)?;
            writeln!(w)?;
            Ok(())
        }
    }
}

pub fn write_json<T: Serialize>(value: &T, path: &Path) -> CliResult<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn format_of(path: &Path, flag: Option<&str>) -> CliResult<Format> {
    match flag {
        Some(f) => Ok(f.parse()?),
        None => Format::from_path(path).ok_or_else(|| {
            CliError::usage(format!("cannot infer the format of {}; pass --format", path.display()))
        }),
    }
}

pub fn format_name(f: Format) -> &'static str {
    match f {
        Format::Graph6 => "g6",
        Format::EdgeList => "el",
    }
}

/// Reads a file that must hold exactly one graph.
pub fn load_graph(input: &GraphInput) -> CliResult<(Graph, Format)> {
    let format = format_of(&input.graph, input.format.as_deref())?;
    let mut graphs =
        read_graphs(&input.graph, format).map_err(|e| CliError::usage(format!("{}: {e}", input.graph.display())))?;
    if graphs.len() != 1 {
        return Err(CliError::usage(format!(
            "{} holds {} graphs, expected one",
            input.graph.display(),
            graphs.len()
        )));
    }
    Ok((graphs.remove(0), format))
}

pub fn budget(args: &BudgetArgs) -> Budget {
    let mut b = if args.budget_nodes == 0 {
        Budget::unlimited()
    } else {
        Budget::nodes(args.budget_nodes)
    };
    if let Some(ms) = args.budget_ms {
        b = b.with_time(Duration::from_millis(ms));
    }
    b
}
