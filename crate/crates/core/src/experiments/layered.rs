//! Layer-by-layer growth of disjoint out-sections through ordered blocks.
//!
//! Layer 1 holds every center of the first block as its own section. To go
//! from layer `i` to `i + 1`, each section is contracted to one vertex and
//! joined to a center `y` of the next block when a private neighbor of some
//! center in the section is adjacent to `y`. A greedy partial cover of that
//! bipartite graph gives pairs `(x, Y)`; the sets `Y` are the sections of
//! the next layer.

use serde::{Deserialize, Serialize};

use super::config::{run_trials, EdgeProbability, ExperimentConfig};
use super::partial_cover::{greedy_partial_cover, PartialCoverOutcome, WindowTolerance};
use super::sampling::BipartiteGraph;
use super::stats::PropertyReport;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::stars::{private_star_system, BlockLayout};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerRecord {
    pub layer: usize,
    pub sections: usize,
    pub min_size: usize,
    pub max_size: usize,
    /// Edges of the contracted bipartite graph into this layer; zero for layer 1.
    pub h_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stall {
    pub layer: usize,
    pub h_edges: usize,
    pub covered: usize,
    pub needed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayeredRun {
    pub layers: Vec<LayerRecord>,
    pub stall: Option<Stall>,
    /// The largest section size never decreases over the layers built.
    pub monotone: bool,
}

/// Replays the layer construction over `blocks` in order.
pub fn layered_growth(g: &Graph, blocks: &[Vec<usize>], tolerance: WindowTolerance) -> Result<LayeredRun> {
    if blocks.len() < 2 {
        return Err(Error::invalid("layered growth needs at least two blocks"));
    }
    let layout = BlockLayout {
        j: Vec::new(),
        blocks: blocks.to_vec(),
    };
    let sys = private_star_system(g, &layout)?;
    let n = g.n();
    let mut star_of = vec![usize::MAX; n];
    let mut block_pos = vec![(usize::MAX, usize::MAX); n];
    for (i, &c) in sys.centers().iter().enumerate() {
        star_of[c] = i;
    }
    for (b, q) in blocks.iter().enumerate() {
        for (pos, &v) in q.iter().enumerate() {
            block_pos[v] = (b, pos);
        }
    }
    let mut sections: Vec<Vec<usize>> = blocks[0].iter().map(|&v| vec![v]).collect();
    let mut layers = vec![record(1, &sections, 0)];
    let mut stall = None;
    for (next, block) in blocks.iter().enumerate().skip(1) {
        let edges = sections.iter().enumerate().flat_map(|(s, members)| {
            let mut ys: Vec<usize> = members
                .iter()
                .flat_map(|&c| sys.leaves(star_of[c]))
                .flat_map(|&leaf| g.neighbors(leaf))
                .filter_map(|&u| {
                    let (b, pos) = block_pos[u as usize];
                    (b == next).then_some(pos)
                })
                .collect();
            ys.sort_unstable();
            ys.dedup();
            ys.into_iter().map(move |y| (s, y))
        });
        let h = BipartiteGraph::from_edges(sections.len(), block.len(), edges.collect::<Vec<_>>());
        match greedy_partial_cover(&h, tolerance) {
            PartialCoverOutcome::Covered { cover } => {
                sections = cover
                    .pairs
                    .iter()
                    .map(|p| p.ys.iter().map(|&y| block[y]).collect())
                    .collect();
                layers.push(record(next + 1, &sections, h.edge_count()));
            }
            PartialCoverOutcome::Stalled { diagnostics } => {
                stall = Some(Stall {
                    layer: next + 1,
                    h_edges: h.edge_count(),
                    covered: diagnostics.covered,
                    needed: diagnostics.needed,
                });
                break;
            }
        }
    }
    let monotone = layers.windows(2).all(|w| w[0].max_size <= w[1].max_size);
    Ok(LayeredRun { layers, stall, monotone })
}

fn record(layer: usize, sections: &[Vec<usize>], h_edges: usize) -> LayerRecord {
    LayerRecord {
        layer,
        sections: sections.len(),
        min_size: sections.iter().map(Vec::len).min().unwrap_or(0),
        max_size: sections.iter().map(Vec::len).max().unwrap_or(0),
        h_edges,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LayeredConfig {
    pub seed: u64,
    pub n: usize,
    pub edge: EdgeProbability,
    pub trials: u64,
    pub layers: usize,
    /// Centers per block; defaults to `floor(n / (500 d))`.
    pub block_size: Option<usize>,
    pub tolerance: WindowTolerance,
    /// Allowed frequency of runs whose largest section shrinks.
    pub ceiling: f64,
}

impl LayeredConfig {
    pub fn scaled(seed: u64, n: usize, trials: u64) -> Self {
        Self {
            seed,
            n,
            edge: EdgeProbability::Exponent(0.8),
            trials,
            layers: 10,
            block_size: None,
            tolerance: WindowTolerance::default(),
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

    pub fn resolved_block_size(&self) -> usize {
        let g = self.graph_config();
        self.block_size
            .unwrap_or_else(|| (self.n as f64 / (500.0 * g.d())).floor() as usize)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LayeredReport {
    pub config: LayeredConfig,
    pub p: f64,
    pub d: f64,
    pub block_size: usize,
    pub non_monotone: PropertyReport,
    /// `layers_reached[k]` counts runs that built exactly `k` layers.
    pub layers_reached: Vec<u64>,
    /// Mean largest section size per layer, over runs that reached it.
    pub mean_max_size: Vec<f64>,
    pub runs: Vec<LayeredRun>,
}

pub fn layered_growth_experiment(cfg: &LayeredConfig) -> Result<LayeredReport> {
    let gcfg = cfg.graph_config();
    gcfg.validate()?;
    if cfg.layers < 2 {
        return Err(Error::invalid("at least two layers are required"));
    }
    let bs = cfg.resolved_block_size();
    if bs == 0 || bs * cfg.layers > cfg.n {
        return Err(Error::invalid(format!(
            "{} blocks of {bs} centers do not fit in {} vertices",
            cfg.layers, cfg.n
        )));
    }
    let blocks: Vec<Vec<usize>> = (0..cfg.layers).map(|i| (i * bs..(i + 1) * bs).collect()).collect();
    let runs = run_trials(cfg.trials, |t| {
        layered_growth(&gcfg.sample(t), &blocks, cfg.tolerance).expect("layout fits the graph")
    });
    let mut layers_reached = vec![0u64; cfg.layers + 1];
    let mut sums = vec![(0usize, 0u64); cfg.layers];
    for r in &runs {
        layers_reached[r.layers.len()] += 1;
        for rec in &r.layers {
            sums[rec.layer - 1].0 += rec.max_size;
            sums[rec.layer - 1].1 += 1;
        }
    }
    let mean_max_size = sums
        .iter()
        .take_while(|s| s.1 > 0)
        .map(|&(total, count)| total as f64 / count as f64)
        .collect();
    let bad = runs.iter().filter(|r| !r.monotone).count() as u64;
    Ok(LayeredReport {
        config: cfg.clone(),
        p: gcfg.p(),
        d: gcfg.d(),
        block_size: bs,
        non_monotone: PropertyReport::new(cfg.trials, bad, cfg.ceiling),
        layers_reached,
        mean_max_size,
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::rng::trial_rng;
    use crate::experiments::sampling::sample_gnp;

    #[test]
    fn empty_graph_stalls_at_layer_two() {
        let g = Graph::empty(30);
        let blocks = vec![(0..5).collect(), (5..10).collect(), (10..15).collect()];
        let run = layered_growth(&g, &blocks, WindowTolerance::default()).unwrap();
        assert_eq!(run.layers.len(), 1);
        assert_eq!(run.layers[0].sections, 5);
        assert_eq!(run.layers[0].max_size, 1);
        assert_eq!(
            run.stall,
            Some(Stall {
                layer: 2,
                h_edges: 0,
                covered: 0,
                needed: 2
            })
        );
        assert!(run.monotone);
    }

    #[test]
    fn two_layers_on_a_dense_instance() {
        let g = sample_gnp(400, 0.05, &mut trial_rng(2, 0));
        let blocks: Vec<Vec<usize>> = vec![(0..20).collect(), (20..40).collect()];
        let run = layered_growth(&g, &blocks, WindowTolerance::default()).unwrap();
        assert_eq!(run.layers[0].sections, 20);
        assert_eq!(run.layers[0].max_size, 1);
        let l2 = run.layers.get(1).expect("second layer built");
        let lower = l2.h_edges.div_ceil(3 * 20);
        assert_eq!(l2.min_size, lower);
        assert_eq!(l2.max_size, lower);
    }

    #[test]
    fn experiment_is_deterministic() {
        let mut cfg = LayeredConfig::scaled(5, 3000, 4);
        cfg.block_size = Some(60);
        cfg.layers = 4;
        let a = serde_json::to_string(&layered_growth_experiment(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&layered_growth_experiment(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
