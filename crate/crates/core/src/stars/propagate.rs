//! Forced membership along out-sections of a star covering.
//!
//! Suppose an independent member `I` of the covering contains a leaf of the
//! star at `v`. Then `v` is not in `I`, and since every edge of that star is
//! a clique member that must meet `I`, all of its leaves are in `I`. A leaf
//! adjacent to another center keeps that center out of `I`, which forces
//! that center's leaves in turn. Following the arcs covers the whole
//! out-section of `v`. Any step whose conclusion is contradicted by the
//! actual covering is reported as a [`Conflict`].

use serde::Serialize;

use super::system::{build_digraph, StarSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::normality::StarCovering;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conflict {
    /// No independent member contains a leaf of the start star.
    Unwitnessed { center: usize },
    /// A forced leaf is missing from the witness, so the edge member
    /// `{center, leaf}` misses it.
    MissingLeaf { independent: usize, center: usize, leaf: usize },
    /// A reached star is trivial, so the singleton member `{center}` misses
    /// the witness.
    TrivialReached { independent: usize, center: usize },
    /// A reached center lies in the witness next to a forced leaf.
    CenterInside { independent: usize, center: usize },
    /// Two forced vertices are adjacent.
    Adjacent { u: usize, w: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Propagation {
    Forced { vertices: Vec<usize> },
    Conflict { conflict: Conflict },
}

impl Propagation {
    pub fn is_conflict(&self) -> bool {
        matches!(self, Propagation::Conflict { .. })
    }
}

/// Leaves of all stars whose centers lie in the out-section of `v`, or the
/// first contradiction met while forcing them into an independent member.
pub fn propagate_forced_independents(g: &Graph, cover: &StarCovering, v: usize) -> Result<Propagation> {
    let n = g.n();
    if cover.centers.universe() != n {
        return Err(Error::invalid("star covering and graph have different vertex counts"));
    }
    let sys = StarSystem::from_star_covering(cover);
    let start = sys
        .index_of(v)
        .ok_or_else(|| Error::invalid(format!("{v} is not a star center")))?;
    let conflict = |c| Ok(Propagation::Conflict { conflict: c });
    if sys.leaves(start).is_empty() {
        return Ok(Propagation::Forced { vertices: Vec::new() });
    }
    let witness = cover
        .certificate
        .independents
        .iter()
        .position(|s| sys.leaves(start).iter().any(|&l| s.contains(l)));
    let Some(independent) = witness else {
        return conflict(Conflict::Unwitnessed { center: v });
    };
    let set = &cover.certificate.independents[independent];
    let digraph = build_digraph(g, &sys);
    let reached = digraph.reachable(start);
    let mut forced = VertexSet::new(n);
    for &i in &reached {
        let center = sys.centers()[i];
        if sys.leaves(i).is_empty() {
            return conflict(Conflict::TrivialReached { independent, center });
        }
        for &leaf in sys.leaves(i) {
            if !set.contains(leaf) {
                return conflict(Conflict::MissingLeaf { independent, center, leaf });
            }
            forced.insert(leaf);
        }
    }
    for &i in &reached {
        let center = sys.centers()[i];
        if set.contains(center) {
            return conflict(Conflict::CenterInside { independent, center });
        }
    }
    if let Some((u, w)) = g.edge_within(&forced) {
        return conflict(Conflict::Adjacent { u, w });
    }
    Ok(Propagation::Forced { vertices: forced.to_vec() })
}
