//! Greedy partial covers of bipartite graphs.
//!
//! With `m` edges and average degree `d = m / |A|`, a partial cover is a set
//! of pairs `(x_i, Y_i)` with distinct `x_i` in `A`, pairwise disjoint
//! `Y_i` in `B` of size `ceil(d / 3)`, each inside the neighborhood of its
//! `x_i`, covering at least a third of `B`.

use serde::{Deserialize, Serialize};

use super::sampling::BipartiteGraph;

/// Relative half-width of the degree windows that select the well-behaved
/// vertices on each side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowTolerance {
    /// A fixed relative width, e.g. `0.01` for `[0.99 d, 1.01 d]`.
    Fixed(f64),
    /// `max(floor, z / sqrt(d))`: `z` binomial standard deviations around
    /// the mean degree `d`, never narrower than `floor`.
    Adaptive { floor: f64, z: f64 },
}

impl Default for WindowTolerance {
    fn default() -> Self {
        WindowTolerance::Adaptive { floor: 0.01, z: 3.0 }
    }
}

impl WindowTolerance {
    pub fn width(&self, mean_degree: f64) -> f64 {
        match *self {
            WindowTolerance::Fixed(t) => t,
            WindowTolerance::Adaptive { floor, z } => {
                if mean_degree > 0.0 {
                    floor.max(z / mean_degree.sqrt())
                } else {
                    floor
                }
            }
        }
    }

    fn admits(&self, degree: usize, mean: f64) -> bool {
        let t = self.width(mean);
        let d = degree as f64;
        d >= (1.0 - t) * mean && d <= (1.0 + t) * mean
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverPair {
    pub x: usize,
    pub ys: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialCover {
    /// Common size of every `Y_i`.
    pub k: usize,
    pub pairs: Vec<CoverPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StallDiagnostics {
    pub pairs: usize,
    pub covered: usize,
    pub needed: usize,
    pub k: usize,
    pub a_window: usize,
    pub b_window: usize,
    /// Edges with both ends inside the degree windows.
    pub good_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PartialCoverOutcome {
    Covered { cover: PartialCover },
    Stalled { diagnostics: StallDiagnostics },
}

impl PartialCoverOutcome {
    pub fn cover(&self) -> Option<&PartialCover> {
        match self {
            PartialCoverOutcome::Covered { cover } => Some(cover),
            PartialCoverOutcome::Stalled { .. } => None,
        }
    }
}

fn target_size(h: &BipartiteGraph) -> usize {
    let a = h.a_len();
    if a == 0 {
        0
    } else {
        h.edge_count().div_ceil(3 * a)
    }
}

/// Scans window vertices of `A` in index order; each one with at least `k`
/// uncovered window neighbors in `B` takes the `k` lowest of them. Stops as
/// soon as a third of `B` is covered.
pub fn greedy_partial_cover(h: &BipartiteGraph, tolerance: WindowTolerance) -> PartialCoverOutcome {
    let (a, b, m) = (h.a_len(), h.b_len(), h.edge_count());
    let k = target_size(h);
    let needed = b.div_ceil(3);
    let b_deg = h.b_degrees();
    let (mean_a, mean_b) = if m == 0 {
        (0.0, 0.0)
    } else {
        (m as f64 / a as f64, m as f64 / b as f64)
    };
    let a_ok: Vec<bool> = (0..a).map(|x| m > 0 && tolerance.admits(h.neighbors(x).len(), mean_a)).collect();
    let b_ok: Vec<bool> = (0..b).map(|y| m > 0 && tolerance.admits(b_deg[y], mean_b)).collect();
    let mut covered = vec![false; b];
    let mut total = 0;
    let mut pairs = Vec::new();
    if m > 0 {
        for x in (0..a).filter(|&x| a_ok[x]) {
            if total >= needed {
                break;
            }
            let free: Vec<usize> = h
                .neighbors(x)
                .iter()
                .map(|&y| y as usize)
                .filter(|&y| b_ok[y] && !covered[y])
                .take(k)
                .collect();
            if free.len() < k {
                continue;
            }
            for &y in &free {
                covered[y] = true;
            }
            total += k;
            pairs.push(CoverPair { x, ys: free });
        }
    }
    if m > 0 && total >= needed {
        PartialCoverOutcome::Covered {
            cover: PartialCover { k, pairs },
        }
    } else {
        let good_edges = (0..a)
            .filter(|&x| a_ok[x])
            .map(|x| h.neighbors(x).iter().filter(|&&y| b_ok[y as usize]).count())
            .sum();
        PartialCoverOutcome::Stalled {
            diagnostics: StallDiagnostics {
                pairs: pairs.len(),
                covered: total,
                needed,
                k,
                a_window: a_ok.iter().filter(|&&t| t).count(),
                b_window: b_ok.iter().filter(|&&t| t).count(),
                good_edges,
            },
        }
    }
}

impl PartialCover {
    /// Checks every partial-cover condition against `h`.
    pub fn check(&self, h: &BipartiteGraph) -> Result<(), String> {
        if self.k != target_size(h) {
            return Err(format!("k = {} but ceil(m / 3|A|) = {}", self.k, target_size(h)));
        }
        let mut used_x = vec![false; h.a_len()];
        let mut used_y = vec![false; h.b_len()];
        let mut covered = 0;
        for p in &self.pairs {
            if p.x >= h.a_len() || std::mem::replace(&mut used_x[p.x], true) {
                return Err(format!("x = {} is out of range or repeated", p.x));
            }
            if p.ys.len() != self.k {
                return Err(format!("Y for x = {} has {} vertices, expected {}", p.x, p.ys.len(), self.k));
            }
            for &y in &p.ys {
                if y >= h.b_len() || std::mem::replace(&mut used_y[y], true) {
                    return Err(format!("y = {y} is out of range or shared"));
                }
                if !h.has_edge(p.x, y) {
                    return Err(format!("{y} is not a neighbor of {}", p.x));
                }
                covered += 1;
            }
        }
        if 3 * covered < h.b_len() {
            return Err(format!("covers {covered} of {} vertices of B", h.b_len()));
        }
        Ok(())
    }
}
