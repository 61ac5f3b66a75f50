//! Seeded Monte Carlo suites for partial covers, short-cycle transversals,
//! the JQ property and forced independence on star coverings.

use serde::{Deserialize, Serialize};

use super::config::{run_trials, EdgeProbability, ExperimentConfig};
use super::partial_cover::{greedy_partial_cover, PartialCoverOutcome, WindowTolerance};
use super::rng::trial_rng;
use super::sampling::{sample_bipartite, sample_triangle_free};
use super::stats::PropertyReport;
use super::transversal::short_cycle_transversal;
use crate::cliques::alpha;
use crate::cycles::{count_short_cycles, girth_exceeds};
use crate::error::{Error, Result};
use crate::normality::{decide_normal, to_star_covering, Budget, Decision};
use crate::stars::{check_jq, propagate_forced_independents, BlockLayout};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartialCoverConfig {
    pub seed: u64,
    pub a: usize,
    pub b: usize,
    pub p: f64,
    pub trials: u64,
    pub tolerance: WindowTolerance,
    /// Allowed stall frequency.
    pub ceiling: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartialCoverRow {
    pub trial: u64,
    pub edges: usize,
    pub covered: bool,
    pub pairs: usize,
    pub k: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartialCoverReport {
    pub config: PartialCoverConfig,
    pub stalls: PropertyReport,
    pub verification_failures: u64,
    #[serde(skip)]
    pub rows: Vec<PartialCoverRow>,
}

impl PartialCoverReport {
    pub fn passed(&self) -> bool {
        self.stalls.within_ceiling() && self.verification_failures == 0
    }
}

pub fn partial_cover_suite(cfg: &PartialCoverConfig) -> Result<PartialCoverReport> {
    if !(0.0..=1.0).contains(&cfg.p) || cfg.trials == 0 {
        return Err(Error::invalid("need p in [0, 1] and at least one trial"));
    }
    let rows = run_trials(cfg.trials, |trial| {
        let h = sample_bipartite(cfg.a, cfg.b, cfg.p, &mut trial_rng(cfg.seed, trial));
        let outcome = greedy_partial_cover(&h, cfg.tolerance);
        let (covered, pairs, k, verified) = match &outcome {
            PartialCoverOutcome::Covered { cover } => (true, cover.pairs.len(), cover.k, cover.check(&h).is_ok()),
            PartialCoverOutcome::Stalled { diagnostics } => (false, diagnostics.pairs, diagnostics.k, true),
        };
        PartialCoverRow {
            trial,
            edges: h.edge_count(),
            covered,
            pairs,
            k,
            verified,
        }
    });
    let stalls = rows.iter().filter(|r| !r.covered).count() as u64;
    Ok(PartialCoverReport {
        config: cfg.clone(),
        stalls: PropertyReport::new(cfg.trials, stalls, cfg.ceiling),
        verification_failures: rows.iter().filter(|r| !r.verified).count() as u64,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransversalRow {
    pub trial: u64,
    pub edges: usize,
    pub short_cycles: u64,
    pub transversal: usize,
    pub girth_raised: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransversalReport {
    pub config: ExperimentConfig,
    pub cycle_len: usize,
    /// Trials where the transversal is larger than the cycle count or
    /// leaves a short cycle behind.
    pub violations: PropertyReport,
    pub mean_transversal: f64,
    #[serde(skip)]
    pub rows: Vec<TransversalRow>,
}

pub fn transversal_suite(cfg: &ExperimentConfig, cycle_len: usize) -> Result<TransversalReport> {
    cfg.validate()?;
    if cycle_len < 3 {
        return Err(Error::invalid("cycle length bound must be at least 3"));
    }
    let rows = run_trials(cfg.trials, |trial| {
        let g = cfg.sample(trial);
        let t = short_cycle_transversal(&g, cycle_len);
        let (rest, _) = g.induced_subgraph(&t.complement());
        TransversalRow {
            trial,
            edges: g.edge_count(),
            short_cycles: count_short_cycles(&g, cycle_len),
            transversal: t.len(),
            girth_raised: girth_exceeds(&rest, cycle_len),
        }
    });
    let bad = rows
        .iter()
        .filter(|r| r.transversal as u64 > r.short_cycles || !r.girth_raised)
        .count() as u64;
    let total: usize = rows.iter().map(|r| r.transversal).sum();
    Ok(TransversalReport {
        config: cfg.clone(),
        cycle_len,
        violations: PropertyReport::new(cfg.trials, bad, 0.0),
        mean_transversal: total as f64 / cfg.trials as f64,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JqConfig {
    pub seed: u64,
    pub n: usize,
    pub edge: EdgeProbability,
    pub trials: u64,
    pub blocks: usize,
    /// Centers per block; defaults to `floor(n / (500 d))`.
    pub block_size: Option<usize>,
    /// Size of `J`; defaults to `floor(n^0.01 / p)`.
    pub j_size: Option<usize>,
    /// Defaults to `ceil(block_size * d / 10)`.
    pub threshold: Option<usize>,
    /// Allowed frequency of violated trials.
    pub ceiling: f64,
}

impl JqConfig {
    pub fn scaled(seed: u64, n: usize, trials: u64) -> Self {
        Self {
            seed,
            n,
            edge: EdgeProbability::Exponent(0.8),
            trials,
            blocks: 10,
            block_size: None,
            j_size: None,
            threshold: None,
            ceiling: 0.05,
        }
    }

    fn graph_config(&self) -> ExperimentConfig {
        ExperimentConfig {
            seed: self.seed,
            n: self.n,
            edge: self.edge,
            trials: self.trials,
        }
    }

    pub fn resolve(&self) -> Result<JqResolved> {
        let g = self.graph_config();
        g.validate()?;
        let (n, p, d) = (self.n as f64, g.p(), g.d());
        let q_max = (n / (500.0 * d)).floor() as usize;
        let q_min = (n / (1000.0 * d)).ceil() as usize;
        let block_size = self.block_size.unwrap_or(q_max);
        let j_size = self.j_size.unwrap_or((n.powf(0.01) / p).floor() as usize);
        let threshold = self.threshold.unwrap_or((block_size as f64 * d / 10.0).ceil() as usize);
        if block_size == 0 || block_size * self.blocks + j_size > self.n {
            return Err(Error::invalid(format!(
                "{} blocks of {block_size} plus |J| = {j_size} do not fit in {} vertices",
                self.blocks, self.n
            )));
        }
        Ok(JqResolved {
            p,
            d,
            block_size,
            q_min,
            q_max,
            j_size,
            threshold,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JqResolved {
    pub p: f64,
    pub d: f64,
    pub block_size: usize,
    pub q_min: usize,
    pub q_max: usize,
    pub j_size: usize,
    pub threshold: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JqRow {
    pub trial: u64,
    pub edges: usize,
    pub satisfied: bool,
    pub start: Option<usize>,
    pub outsection_len: usize,
    pub private_total: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JqReport {
    pub config: JqConfig,
    pub resolved: JqResolved,
    pub violations: PropertyReport,
    pub rows: Vec<JqRow>,
}

/// Blocks are consecutive ranges from vertex 0 and `J` is the last `j_size`
/// vertices; in `G(n, p)` any fixed labeling is as good as a random one.
pub fn jq_layout(n: usize, blocks: usize, block_size: usize, j_size: usize) -> BlockLayout {
    BlockLayout {
        j: (n - j_size..n).collect(),
        blocks: (0..blocks).map(|i| (i * block_size..(i + 1) * block_size).collect()).collect(),
    }
}

pub fn jq_suite(cfg: &JqConfig) -> Result<JqReport> {
    let resolved = cfg.resolve()?;
    let gcfg = cfg.graph_config();
    let layout = jq_layout(cfg.n, cfg.blocks, resolved.block_size, resolved.j_size);
    let rows = run_trials(cfg.trials, |trial| {
        let g = gcfg.sample(trial);
        let out = check_jq(&g, &layout, resolved.threshold).expect("layout fits the graph");
        JqRow {
            trial,
            edges: g.edge_count(),
            satisfied: out.satisfied,
            start: out.witness.as_ref().map(|w| w.start),
            outsection_len: out.witness.as_ref().map_or(0, |w| w.outsection.len()),
            private_total: out.witness.as_ref().map_or(0, |w| w.private_total),
        }
    });
    let bad = rows.iter().filter(|r| !r.satisfied).count() as u64;
    Ok(JqReport {
        config: cfg.clone(),
        resolved,
        violations: PropertyReport::new(cfg.trials, bad, cfg.ceiling),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutsectionConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Average-degree range; each graph draws its target degree uniformly.
    pub degree_min: f64,
    pub degree_max: f64,
    pub trials: u64,
    pub budget_nodes: u64,
}

impl OutsectionConfig {
    pub fn new(seed: u64, n_min: usize, n_max: usize, trials: u64) -> Self {
        Self {
            seed,
            n_min,
            n_max,
            degree_min: 1.0,
            degree_max: 5.0,
            trials,
            budget_nodes: 2_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutsectionRow {
    pub trial: u64,
    pub n: usize,
    pub edges: usize,
    pub verdict: &'static str,
    pub stars: Option<usize>,
    pub alpha: Option<usize>,
    pub covering_valid: Option<bool>,
    pub centers: usize,
    pub conflicts: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutsectionReport {
    pub config: OutsectionConfig,
    pub graphs: u64,
    pub normal: u64,
    pub not_normal: u64,
    pub budget_exceeded: u64,
    /// Normal graphs whose star covering failed validation or has more
    /// stars than the independence number.
    pub covering_failures: u64,
    /// Start centers checked, and those that reported a conflict.
    pub conflicts: PropertyReport,
    pub rows: Vec<OutsectionRow>,
}

impl OutsectionReport {
    pub fn passed(&self) -> bool {
        self.covering_failures == 0 && self.conflicts.bad_events == 0
    }
}

/// One random triangle-free graph of the outsection corpus.
pub fn outsection_graph(cfg: &OutsectionConfig, trial: u64) -> crate::graph::Graph {
    let mut rng = trial_rng(cfg.seed, trial);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let deg = rng.gen_range(cfg.degree_min..=cfg.degree_max);
    let p = if n > 1 { (deg / (n - 1) as f64).min(1.0) } else { 0.0 };
    sample_triangle_free(n, p, &mut rng)
}

pub fn outsection_suite(cfg: &OutsectionConfig) -> Result<OutsectionReport> {
    if cfg.n_min > cfg.n_max || cfg.degree_min > cfg.degree_max || cfg.trials == 0 {
        return Err(Error::invalid("empty size or degree range, or no trials"));
    }
    let rows = run_trials(cfg.trials, |trial| {
        let g = outsection_graph(cfg, trial);
        let mut row = OutsectionRow {
            trial,
            n: g.n(),
            edges: g.edge_count(),
            verdict: "",
            stars: None,
            alpha: None,
            covering_valid: None,
            centers: 0,
            conflicts: 0,
        };
        let decision = decide_normal(&g, Budget::nodes(cfg.budget_nodes));
        row.verdict = decision.label();
        if let Decision::Normal(cert) = decision {
            let sc = to_star_covering(&g, &cert).expect("triangle-free graph with a verified certificate");
            row.stars = Some(sc.stars.len());
            row.alpha = Some(alpha(&g));
            row.covering_valid = Some(sc.validate(&g).is_ok());
            for v in sc.centers.iter() {
                row.centers += 1;
                let prop = propagate_forced_independents(&g, &sc, v).expect("center of the covering");
                if prop.is_conflict() {
                    row.conflicts += 1;
                }
            }
        }
        row
    });
    let count = |label: &str| rows.iter().filter(|r| r.verdict == label).count() as u64;
    let covering_failures = rows
        .iter()
        .filter(|r| r.covering_valid == Some(false) || matches!((r.stars, r.alpha), (Some(s), Some(a)) if s > a))
        .count() as u64;
    let centers: usize = rows.iter().map(|r| r.centers).sum();
    let conflicts: usize = rows.iter().map(|r| r.conflicts).sum();
    Ok(OutsectionReport {
        config: cfg.clone(),
        graphs: cfg.trials,
        normal: count("Normal"),
        not_normal: count("NotNormal"),
        budget_exceeded: count("BudgetExceeded"),
        covering_failures,
        conflicts: PropertyReport::new(centers as u64, conflicts as u64, 0.0),
        rows,
    })
}
