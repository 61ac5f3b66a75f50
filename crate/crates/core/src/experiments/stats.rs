//! Tail bounds and binomial confidence intervals.

use serde::Serialize;

use crate::error::{Error, Result};

/// Lower- and upper-tail Chernoff bounds `exp(-mu delta^2 / 2)` and
/// `exp(-mu delta^2 / 3)` for a sum of independent Bernoulli variables with
/// mean `mu`.
pub fn chernoff_bounds(mu: f64, delta: f64) -> Result<(f64, f64)> {
    if !(mu.is_finite() && mu >= 0.0) {
        return Err(Error::invalid(format!("mean must be finite and non-negative, got {mu}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::invalid(format!("delta must lie in (0, 1), got {delta}")));
    }
    let e = mu * delta * delta;
    Ok(((-e / 2.0).exp(), (-e / 3.0).exp()))
}

/// Markov's bound `P[X >= a] <= mean / a` for non-negative `X`.
pub fn markov_bound(mean: f64, a: f64) -> Result<f64> {
    if !(mean.is_finite() && mean >= 0.0) {
        return Err(Error::invalid(format!("mean must be finite and non-negative, got {mean}")));
    }
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::invalid(format!("threshold must be positive, got {a}")));
    }
    Ok(mean / a)
}

const Z95: f64 = 1.959_963_984_540_054;

/// Wilson score interval at 95% for `k` successes in `n` trials.
pub fn wilson95(k: u64, n: u64) -> [f64; 2] {
    if n == 0 {
        return [0.0, 1.0];
    }
    let (k, n) = (k as f64, n as f64);
    let phat = k / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let lo = if k == 0.0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if k == n { 1.0 } else { (center + half).min(1.0) };
    [lo, hi]
}

/// Frequency of a bad event against its allowed ceiling.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub trials: u64,
    pub bad_events: u64,
    pub ceiling: f64,
    pub wilson95: [f64; 2],
}

impl PropertyReport {
    pub fn new(trials: u64, bad_events: u64, ceiling: f64) -> Self {
        Self {
            trials,
            bad_events,
            ceiling,
            wilson95: wilson95(bad_events, trials),
        }
    }

    pub fn frequency(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.bad_events as f64 / self.trials as f64
        }
    }

    pub fn within_ceiling(&self) -> bool {
        self.frequency() <= self.ceiling
    }
}
