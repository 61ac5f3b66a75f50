//! Short cycles, independence number and maximum degree of `G(n, p)`.
//!
//! Bad events per trial:
//! - cycles: more than `cycle_factor * d^L` cycles of length at most `L`;
//! - alpha: an upper bound on the independence number reaches
//!   `c * log(n) / p`. The bound is the size of a greedy clique cover, so a
//!   trial that passes certifies the true value passes too;
//! - degree: some vertex has degree above `degree_factor * d`.

use serde::{Deserialize, Serialize};

use super::config::{run_trials, ExperimentConfig};
use super::stats::PropertyReport;
use crate::cliques::greedy_clique_cover;
use crate::cycles::count_short_cycles;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma1Part {
    Cycles,
    Alpha,
    Degree,
}

impl Lemma1Part {
    pub const ALL: [Lemma1Part; 3] = [Lemma1Part::Cycles, Lemma1Part::Alpha, Lemma1Part::Degree];
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lemma1Params {
    pub cycle_len: usize,
    pub cycle_factor: f64,
    pub alpha_c: f64,
    /// Base of the logarithm in the independence threshold; natural if absent.
    pub log_base: Option<f64>,
    pub degree_factor: f64,
    pub cycle_threshold: Option<f64>,
    pub alpha_threshold: Option<f64>,
    pub degree_threshold: Option<f64>,
}

impl Default for Lemma1Params {
    fn default() -> Self {
        Self {
            cycle_len: 7,
            cycle_factor: 4.0,
            alpha_c: 10.0,
            log_base: None,
            degree_factor: 2.0,
            cycle_threshold: None,
            alpha_threshold: None,
            degree_threshold: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma1Thresholds {
    pub p: f64,
    pub d: f64,
    pub cycles: f64,
    /// Bound on the mean short-cycle count, half the cycle threshold.
    pub cycles_mean_bound: f64,
    pub alpha: f64,
    pub degree: f64,
    pub cycles_ceiling: f64,
    pub alpha_ceiling: f64,
    pub degree_ceiling: f64,
}

impl Lemma1Params {
    pub fn resolve(&self, cfg: &ExperimentConfig) -> Lemma1Thresholds {
        let (n, p, d) = (cfg.n as f64, cfg.p(), cfg.d());
        let log_n = match self.log_base {
            Some(b) => n.ln() / b.ln(),
            None => n.ln(),
        };
        let cycles = self.cycle_threshold.unwrap_or(self.cycle_factor * d.powi(self.cycle_len as i32));
        let alpha = self.alpha_threshold.unwrap_or(self.alpha_c * log_n / p);
        Lemma1Thresholds {
            p,
            d,
            cycles,
            cycles_mean_bound: cycles / 2.0,
            alpha,
            degree: self.degree_threshold.unwrap_or(self.degree_factor * d),
            cycles_ceiling: 0.5,
            // n^(-c * threshold / 3) and exp(-d / 10).
            alpha_ceiling: (-(self.alpha_c * alpha / 3.0) * n.ln()).exp(),
            degree_ceiling: (-d / 10.0).exp(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma1Row {
    pub trial: u64,
    pub edges: usize,
    pub short_cycles: Option<u64>,
    pub alpha_upper: Option<usize>,
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma1Report {
    pub config: ExperimentConfig,
    pub params: Lemma1Params,
    pub thresholds: Lemma1Thresholds,
    pub cycles: Option<PropertyReport>,
    pub mean_short_cycles: Option<f64>,
    pub alpha: Option<PropertyReport>,
    pub degree: Option<PropertyReport>,
    #[serde(skip)]
    pub rows: Vec<Lemma1Row>,
}

impl Lemma1Report {
    /// Every measured frequency is within its ceiling and the mean cycle
    /// count is within its bound.
    pub fn passed(&self) -> bool {
        [&self.cycles, &self.alpha, &self.degree]
            .into_iter()
            .flatten()
            .all(PropertyReport::within_ceiling)
            && self.mean_short_cycles.is_none_or(|m| m <= self.thresholds.cycles_mean_bound)
    }
}

pub fn lemma1_suite(cfg: &ExperimentConfig, params: &Lemma1Params, parts: &[Lemma1Part]) -> Lemma1Report {
    let th = params.resolve(cfg);
    let want = |p| parts.contains(&p);
    let rows = run_trials(cfg.trials, |trial| {
        let g = cfg.sample(trial);
        Lemma1Row {
            trial,
            edges: g.edge_count(),
            short_cycles: want(Lemma1Part::Cycles).then(|| count_short_cycles(&g, params.cycle_len)),
            alpha_upper: want(Lemma1Part::Alpha).then(|| greedy_clique_cover(&g).len()),
            max_degree: want(Lemma1Part::Degree).then(|| g.max_degree()),
        }
    });
    let report = |bad: Option<u64>, ceiling| bad.map(|b| PropertyReport::new(cfg.trials, b, ceiling));
    let count = |f: &dyn Fn(&Lemma1Row) -> Option<bool>| -> Option<u64> {
        let flags: Option<Vec<bool>> = rows.iter().map(f).collect();
        flags.map(|v| v.iter().filter(|&&b| b).count() as u64)
    };
    let cycles_bad = count(&|r| r.short_cycles.map(|x| x as f64 > th.cycles));
    let alpha_bad = count(&|r| r.alpha_upper.map(|a| a as f64 >= th.alpha));
    let degree_bad = count(&|r| r.max_degree.map(|m| m as f64 > th.degree));
    let mean_short_cycles = want(Lemma1Part::Cycles).then(|| {
        let total: u64 = rows.iter().filter_map(|r| r.short_cycles).sum();
        total as f64 / cfg.trials as f64
    });
    Lemma1Report {
        config: cfg.clone(),
        params: params.clone(),
        cycles: report(cycles_bad, th.cycles_ceiling),
        alpha: report(alpha_bad, th.alpha_ceiling),
        degree: report(degree_bad, th.degree_ceiling),
        thresholds: th,
        mean_short_cycles,
        rows,
    }
}
