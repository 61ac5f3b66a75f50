//! Normal graphs: exact certification, star coverings and out-sections, and
//! seeded random-graph experiments.

pub mod cliques;
pub mod cycles;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod normality;
pub mod stars;
mod vertex_set;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
