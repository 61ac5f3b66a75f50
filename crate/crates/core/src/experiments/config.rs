use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::trial_rng;
use super::sampling::sample_gnp;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge probability given directly or as an exponent `e` with `p = n^-e`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeProbability {
    P(f64),
    Exponent(f64),
}

/// Master seed, graph size, edge probability and trial count shared by the
/// `G(n, p)` experiments.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub n: usize,
    pub edge: EdgeProbability,
    pub trials: u64,
}

impl ExperimentConfig {
    pub fn p(&self) -> f64 {
        match self.edge {
            EdgeProbability::P(p) => p,
            EdgeProbability::Exponent(e) => (self.n as f64).powf(-e),
        }
    }

    /// Expected degree scale `n p`.
    pub fn d(&self) -> f64 {
        self.n as f64 * self.p()
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.p();
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(format!("edge probability {p} is outside [0, 1]")));
        }
        if self.trials == 0 {
            return Err(Error::invalid("at least one trial is required"));
        }
        Ok(())
    }

    /// The graph of trial `trial`; depends only on the seed and the trial index.
    pub fn sample(&self, trial: u64) -> Graph {
        sample_gnp(self.n, self.p(), &mut trial_rng(self.seed, trial))
    }
}

/// Runs `f` on every trial index in parallel and returns results in trial order.
pub fn run_trials<T: Send>(trials: u64, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    (0..trials).into_par_iter().map(f).collect()
}

/// Writes rows as CSV with a header line.
pub fn write_csv<W: std::io::Write, T: Serialize>(writer: W, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
