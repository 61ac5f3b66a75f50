//! Non-normal graph search over a graph6 corpus or random `G(n, p)` graphs.
//!
//! Graphs are decided in parallel and reported in input order. Timings go
//! to the stderr summary only, so the JSON catalog is reproducible.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::Args;
use normgraph::experiments::{EdgeProbability, ExperimentConfig};
use normgraph::io::{encode_graph6, read_graphs, Format};
use normgraph::normality::{decide_normal, Decision};
use normgraph::Graph;
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{budget, emit, header, CliResult, EXIT_BUDGET, EXIT_OK};
use crate::BudgetArgs;

#[derive(Args)]
pub struct HuntArgs {
    /// graph6 corpus, e.g. all graphs up to isomorphism on at most 7 vertices.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    corpus: Option<PathBuf>,
    /// Largest vertex count examined in corpus mode; larger graphs are
    /// counted as skipped.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Decide `--trials` random graphs instead of a corpus.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
enum HuntMode<'a> {
    Corpus { corpus: &'a PathBuf, max_n: usize },
    Random { config: ExperimentConfig },
}

#[derive(Serialize)]
struct HuntHeader<'a> {
    #[serde(flatten)]
    mode: HuntMode<'a>,
    budget_nodes: u64,
    budget_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
struct Found {
    /// Position in the corpus, or the trial number in random mode.
    index: u64,
    n: usize,
    graph6: String,
}

#[derive(Serialize)]
struct BudgetHit {
    index: u64,
    n: usize,
    graph6: String,
    nodes: u64,
}

#[derive(Serialize)]
struct Catalog {
    examined: u64,
    normal: u64,
    skipped_over_max_n: u64,
    not_normal: Vec<Found>,
    budget_exceeded: Vec<BudgetHit>,
}

pub fn run(a: &HuntArgs) -> CliResult {
    let random = ExperimentConfig {
        seed: a.seed,
        n: a.n,
        edge: EdgeProbability::P(a.p),
        trials: a.trials,
    };
    let mode = match &a.corpus {
        Some(corpus) => HuntMode::Corpus {
            corpus,
            max_n: a.max_n,
        },
        None => {
            random.validate()?;
            HuntMode::Random { config: random.clone() }
        }
    };
    header(
        "hunt",
        &HuntHeader {
            mode,
            budget_nodes: a.budget.budget_nodes,
            budget_ms: a.budget.budget_ms,
        },
    )?;
    let (graphs, skipped) = match &a.corpus {
        Some(path) => {
            let all = read_graphs(path, Format::Graph6)?;
            let total = all.len();
            let kept: Vec<(u64, Graph)> = all
                .into_iter()
                .enumerate()
                .filter(|(_, g)| g.n() <= a.max_n)
                .map(|(i, g)| (i as u64, g))
                .collect();
            let skipped = (total - kept.len()) as u64;
            (kept, skipped)
        }
        None => ((0..a.trials).map(|t| (t, random.sample(t))).collect(), 0),
    };
    let b = budget(&a.budget);
    let decided: Vec<(Decision, Duration)> = graphs
        .par_iter()
        .map(|(_, g)| {
            let start = Instant::now();
            let d = decide_normal(g, b);
            (d, start.elapsed())
        })
        .collect();
    let mut catalog = Catalog {
        examined: graphs.len() as u64,
        normal: 0,
        skipped_over_max_n: skipped,
        not_normal: Vec::new(),
        budget_exceeded: Vec::new(),
    };
    for ((index, g), (decision, elapsed)) in graphs.iter().zip(decided) {
        let graph6 = encode_graph6(g);
        match decision {
            Decision::Normal(_) => catalog.normal += 1,
            Decision::NotNormal => {
                eprintln!("not normal: #{index} {graph6} ({} ms)", elapsed.as_millis());
                catalog.not_normal.push(Found {
                    index: *index,
                    n: g.n(),
                    graph6,
                });
            }
            Decision::BudgetExceeded { nodes } => {
                eprintln!("budget exceeded: #{index} {graph6} ({} ms)", elapsed.as_millis());
                catalog.budget_exceeded.push(BudgetHit {
                    index: *index,
                    n: g.n(),
                    graph6,
                    nodes,
                });
            }
        }
    }
    eprintln!(
        "examined {}, normal {}, not normal {}, budget exceeded {}, skipped {}",
        catalog.examined,
        catalog.normal,
        catalog.not_normal.len(),
        catalog.budget_exceeded.len(),
        catalog.skipped_over_max_n
    );
    emit(&catalog, a.out.as_deref())?;
    if catalog.budget_exceeded.is_empty() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_BUDGET)
    }
}
