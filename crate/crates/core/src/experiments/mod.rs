//! Seeded random-graph experiments. Every trial draws from its own
//! generator stream, so reports are identical for a given seed whatever the
//! thread count.

mod config;
mod layered;
mod lemma1;
mod partial_cover;
mod rng;
mod sampling;
mod stats;
mod suites;
mod transversal;

pub use config::{run_trials, write_csv, EdgeProbability, ExperimentConfig};
pub use layered::{layered_growth, layered_growth_experiment, LayerRecord, LayeredConfig, LayeredReport, LayeredRun, Stall};
pub use lemma1::{lemma1_suite, Lemma1Params, Lemma1Part, Lemma1Report, Lemma1Row, Lemma1Thresholds};
pub use partial_cover::{greedy_partial_cover, CoverPair, PartialCover, PartialCoverOutcome, StallDiagnostics, WindowTolerance};
pub use rng::trial_rng;
pub use sampling::{sample_bipartite, sample_gnp, sample_triangle_free, BipartiteGraph};
pub use stats::{chernoff_bounds, markov_bound, wilson95, PropertyReport};
pub use suites::{
    jq_layout, jq_suite, outsection_graph, outsection_suite, partial_cover_suite, transversal_suite, JqConfig,
    JqReport, JqResolved, JqRow, OutsectionConfig, OutsectionReport, OutsectionRow, PartialCoverConfig,
    PartialCoverReport, PartialCoverRow, TransversalReport, TransversalRow,
};
pub use transversal::short_cycle_transversal;
