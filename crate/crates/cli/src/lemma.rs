//! `lemma <name>`: seeded verification suites with configurable thresholds.
//!
//! Defaults per suite:
//! - cycles, alpha, degree: `n = 100000`, `p = n^-0.9`, 50 trials;
//! - transversal: `n = 20000`, `p = n^-0.9`, 20 trials;
//! - partial-cover: `|A| = |B| = 2000`, `p = 0.05`, 200 trials;
//! - outsection: triangle-free graphs on 3 to 14 vertices, 500 trials;
//!   `--n` fixes the vertex count and `--n-min` turns it into a range;
//! - jq, layered: `n = 50000`, `p = n^-0.8`, 20 trials.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use normgraph::experiments::{
    jq_suite, layered_growth_experiment, lemma1_suite, outsection_suite, partial_cover_suite, transversal_suite,
    write_csv, EdgeProbability, ExperimentConfig, JqConfig, LayeredConfig, Lemma1Params, Lemma1Part,
    OutsectionConfig, PartialCoverConfig, PropertyReport, WindowTolerance,
};
use serde::Serialize;

use crate::output::{emit, header, CliError, CliResult, EXIT_NEGATIVE, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LemmaName {
    Cycles,
    Alpha,
    Degree,
    PartialCover,
    Outsection,
    Jq,
    Layered,
    Transversal,
}

#[derive(Args)]
pub struct LemmaArgs {
    #[arg(value_enum)]
    name: LemmaName,
    /// Vertex count; for outsection with `--n-min`, the largest one.
    #[arg(long)]
    n: Option<usize>,
    /// Smallest vertex count for outsection.
    #[arg(long)]
    n_min: Option<usize>,
    /// Edge probability.
    #[arg(long, conflicts_with = "exponent")]
    p: Option<f64>,
    /// Edge probability as p = n^-exponent.
    #[arg(long)]
    exponent: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: Option<u64>,
    /// Side sizes of the bipartite graph for partial-cover.
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Largest cycle length counted (cycles) or destroyed (transversal).
    #[arg(long)]
    cycle_len: Option<usize>,
    #[arg(long)]
    cycle_threshold: Option<f64>,
    /// Constant c in the independence threshold c log(n) / p.
    #[arg(long)]
    alpha_c: Option<f64>,
    /// Logarithm base of that threshold; natural by default.
    #[arg(long)]
    log_base: Option<f64>,
    #[arg(long)]
    alpha_threshold: Option<f64>,
    #[arg(long)]
    degree_threshold: Option<f64>,
    /// Fixed relative width of the degree windows; adaptive when absent.
    #[arg(long)]
    window_tolerance: Option<f64>,
    /// Number of blocks (jq) or layers (layered).
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long)]
    block_size: Option<usize>,
    #[arg(long)]
    j_size: Option<usize>,
    /// Private-neighbor total required by jq.
    #[arg(long)]
    threshold: Option<usize>,
    /// Allowed bad-event frequency.
    #[arg(long)]
    ceiling: Option<f64>,
    /// Search-node limit per graph for outsection.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Per-trial rows as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl LemmaArgs {
    fn edge(&self, default_exponent: f64) -> EdgeProbability {
        match (self.p, self.exponent) {
            (Some(p), _) => EdgeProbability::P(p),
            (None, Some(e)) => EdgeProbability::Exponent(e),
            (None, None) => EdgeProbability::Exponent(default_exponent),
        }
    }

    fn graph_config(&self, n: usize, exponent: f64, trials: u64) -> ExperimentConfig {
        ExperimentConfig {
            seed: self.seed,
            n: self.n.unwrap_or(n),
            edge: self.edge(exponent),
            trials: self.trials.unwrap_or(trials),
        }
    }

    fn tolerance(&self) -> WindowTolerance {
        self.window_tolerance.map_or_else(WindowTolerance::default, WindowTolerance::Fixed)
    }

    fn refuse(&self, allowed: &[&str]) -> CliResult<()> {
        let given = [
            ("a", self.a.is_some()),
            ("b", self.b.is_some()),
            ("n-min", self.n_min.is_some()),
            ("cycle-len", self.cycle_len.is_some()),
            ("cycle-threshold", self.cycle_threshold.is_some()),
            ("alpha-c", self.alpha_c.is_some()),
            ("log-base", self.log_base.is_some()),
            ("alpha-threshold", self.alpha_threshold.is_some()),
            ("degree-threshold", self.degree_threshold.is_some()),
            ("window-tolerance", self.window_tolerance.is_some()),
            ("blocks", self.blocks.is_some()),
            ("block-size", self.block_size.is_some()),
            ("j-size", self.j_size.is_some()),
            ("threshold", self.threshold.is_some()),
            ("ceiling", self.ceiling.is_some()),
            ("budget-nodes", self.budget_nodes.is_some()),
        ];
        match given.iter().find(|(flag, set)| *set && !allowed.contains(flag)) {
            Some((flag, _)) => Err(CliError::usage(format!("--{flag} does not apply to this suite"))),
            None => Ok(()),
        }
    }
}

fn finish<R: Serialize, Row: Serialize>(
    name: &str,
    report: &R,
    rows: &[Row],
    verdicts: &[(&str, &PropertyReport)],
    passed: bool,
    args: &LemmaArgs,
) -> CliResult {
    for (label, r) in verdicts {
        eprintln!(
            "{name} {label}: {}/{} bad (ceiling {:.3e}, 95% CI [{:.4}, {:.4}]) {}",
            r.bad_events,
            r.trials,
            r.ceiling,
            r.wilson95[0],
            r.wilson95[1],
            if r.within_ceiling() { "ok" } else { "exceeded" }
        );
    }
    if let Some(path) = &args.csv {
        write_csv(BufWriter::new(File::create(path)?), rows)?;
    }
    emit(report, args.out.as_deref())?;
    Ok(if passed { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn run(a: &LemmaArgs) -> CliResult {
    match a.name {
        LemmaName::Cycles | LemmaName::Alpha | LemmaName::Degree => lemma1(a),
        LemmaName::Transversal => transversal(a),
        LemmaName::PartialCover => partial_cover(a),
        LemmaName::Outsection => outsection(a),
        LemmaName::Jq => jq(a),
        LemmaName::Layered => layered(a),
    }
}

#[derive(Serialize)]
struct Lemma1Header<'a> {
    part: Lemma1Part,
    config: &'a ExperimentConfig,
    params: &'a Lemma1Params,
}

fn lemma1(a: &LemmaArgs) -> CliResult {
    let (part, allowed): (Lemma1Part, &[&str]) = match a.name {
        LemmaName::Cycles => (Lemma1Part::Cycles, &["cycle-len", "cycle-threshold"]),
        LemmaName::Alpha => (Lemma1Part::Alpha, &["alpha-c", "log-base", "alpha-threshold"]),
        _ => (Lemma1Part::Degree, &["degree-threshold"]),
    };
    a.refuse(allowed)?;
    let cfg = a.graph_config(100_000, 0.9, 50);
    cfg.validate()?;
    let defaults = Lemma1Params::default();
    let params = Lemma1Params {
        cycle_len: a.cycle_len.unwrap_or(defaults.cycle_len),
        alpha_c: a.alpha_c.unwrap_or(defaults.alpha_c),
        log_base: a.log_base,
        cycle_threshold: a.cycle_threshold,
        alpha_threshold: a.alpha_threshold,
        degree_threshold: a.degree_threshold,
        ..defaults
    };
    header(
        "lemma",
        &Lemma1Header {
            part,
            config: &cfg,
            params: &params,
        },
    )?;
    let report = lemma1_suite(&cfg, &params, &[part]);
    let verdict = [&report.cycles, &report.alpha, &report.degree]
        .into_iter()
        .flatten()
        .map(|r| ("bad events", r))
        .collect::<Vec<_>>();
    if let Some(mean) = report.mean_short_cycles {
        eprintln!(
            "mean short cycles {mean:.1} (bound {:.1})",
            report.thresholds.cycles_mean_bound
        );
    }
    finish(&format!("{part:?}").to_lowercase(), &report, &report.rows, &verdict, report.passed(), a)
}

#[derive(Serialize)]
struct TransversalHeader<'a> {
    config: &'a ExperimentConfig,
    cycle_len: usize,
}

fn transversal(a: &LemmaArgs) -> CliResult {
    a.refuse(&["cycle-len"])?;
    let cfg = a.graph_config(20_000, 0.9, 20);
    cfg.validate()?;
    let cycle_len = a.cycle_len.unwrap_or(7);
    header("lemma", &TransversalHeader { config: &cfg, cycle_len })?;
    let report = transversal_suite(&cfg, cycle_len)?;
    eprintln!("mean transversal {:.1}", report.mean_transversal);
    let passed = report.violations.within_ceiling();
    finish("transversal", &report, &report.rows, &[("violations", &report.violations)], passed, a)
}

fn partial_cover(a: &LemmaArgs) -> CliResult {
    a.refuse(&["a", "b", "window-tolerance", "ceiling"])?;
    if a.exponent.is_some() || a.n.is_some() {
        return Err(CliError::usage("partial-cover takes --a, --b and --p"));
    }
    let cfg = PartialCoverConfig {
        seed: a.seed,
        a: a.a.unwrap_or(2000),
        b: a.b.unwrap_or(2000),
        p: a.p.unwrap_or(0.05),
        trials: a.trials.unwrap_or(200),
        tolerance: a.tolerance(),
        ceiling: a.ceiling.unwrap_or(0.01),
    };
    header("lemma partial-cover", &cfg)?;
    let report = partial_cover_suite(&cfg)?;
    if report.verification_failures > 0 {
        eprintln!("{} covers failed re-verification", report.verification_failures);
    }
    finish("partial-cover", &report, &report.rows, &[("stalls", &report.stalls)], report.passed(), a)
}

fn outsection(a: &LemmaArgs) -> CliResult {
    a.refuse(&["n-min", "budget-nodes"])?;
    if a.p.is_some() || a.exponent.is_some() {
        return Err(CliError::usage("outsection draws its own edge densities"));
    }
    let (n_min, n_max) = match (a.n_min, a.n) {
        (lo, Some(n)) => (lo.unwrap_or(n), n),
        (lo, None) => (lo.unwrap_or(3), 14),
    };
    let mut cfg = OutsectionConfig::new(a.seed, n_min, n_max, a.trials.unwrap_or(500));
    if let Some(nodes) = a.budget_nodes {
        cfg.budget_nodes = nodes;
    }
    header("lemma outsection", &cfg)?;
    let report = outsection_suite(&cfg)?;
    eprintln!(
        "{} graphs: {} normal, {} not normal, {} over budget; {} covering failures",
        report.graphs, report.normal, report.not_normal, report.budget_exceeded, report.covering_failures
    );
    finish("outsection", &report, &report.rows, &[("conflicts", &report.conflicts)], report.passed(), a)
}

#[derive(Serialize)]
struct JqHeader<'a> {
    config: &'a JqConfig,
    resolved: &'a normgraph::experiments::JqResolved,
}

fn jq(a: &LemmaArgs) -> CliResult {
    a.refuse(&["blocks", "block-size", "j-size", "threshold", "ceiling"])?;
    let base = a.graph_config(50_000, 0.8, 20);
    let mut cfg = JqConfig::scaled(base.seed, base.n, base.trials);
    cfg.edge = base.edge;
    cfg.blocks = a.blocks.unwrap_or(cfg.blocks);
    cfg.block_size = a.block_size;
    cfg.j_size = a.j_size;
    cfg.threshold = a.threshold;
    cfg.ceiling = a.ceiling.unwrap_or(cfg.ceiling);
    let resolved = cfg.resolve()?;
    header(
        "lemma jq",
        &JqHeader {
            config: &cfg,
            resolved: &resolved,
        },
    )?;
    let report = jq_suite(&cfg)?;
    let passed = report.violations.within_ceiling();
    finish("jq", &report, &report.rows, &[("violations", &report.violations)], passed, a)
}

#[derive(Serialize)]
struct LayeredHeader<'a> {
    config: &'a LayeredConfig,
    block_size: usize,
}

#[derive(Serialize)]
struct LayeredCsvRow {
    trial: u64,
    layers: usize,
    stall_layer: Option<usize>,
    max_size: usize,
    monotone: bool,
}

fn layered(a: &LemmaArgs) -> CliResult {
    a.refuse(&["blocks", "block-size", "window-tolerance", "ceiling"])?;
    let base = a.graph_config(50_000, 0.8, 20);
    let mut cfg = LayeredConfig::scaled(base.seed, base.n, base.trials);
    cfg.edge = base.edge;
    cfg.layers = a.blocks.unwrap_or(cfg.layers);
    cfg.block_size = a.block_size;
    cfg.tolerance = a.tolerance();
    cfg.ceiling = a.ceiling.unwrap_or(cfg.ceiling);
    header(
        "lemma layered",
        &LayeredHeader {
            config: &cfg,
            block_size: cfg.resolved_block_size(),
        },
    )?;
    let report = layered_growth_experiment(&cfg)?;
    eprintln!("runs by layers reached: {:?}", report.layers_reached);
    eprintln!("mean largest section per layer: {:?}", report.mean_max_size);
    let rows: Vec<LayeredCsvRow> = report
        .runs
        .iter()
        .enumerate()
        .map(|(t, r)| LayeredCsvRow {
            trial: t as u64,
            layers: r.layers.len(),
            stall_layer: r.stall.as_ref().map(|s| s.layer),
            max_size: r.layers.last().map_or(0, |l| l.max_size),
            monotone: r.monotone,
        })
        .collect();
    let passed = report.non_monotone.within_ceiling();
    finish("layered", &report, &rows, &[("non-monotone", &report.non_monotone)], passed, a)
}
