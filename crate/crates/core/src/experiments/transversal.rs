use crate::cycles::for_each_short_cycle;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A vertex set meeting every cycle of length at most `max_len`.
///
/// Cycles are visited in enumeration order; each one not yet hit
/// contributes its smallest vertex. The result has at most one vertex per
/// short cycle.
pub fn short_cycle_transversal(g: &Graph, max_len: usize) -> VertexSet {
    let mut t = VertexSet::new(g.n());
    for_each_short_cycle(g, max_len, |cycle| {
        if !cycle.iter().any(|&v| t.contains(v)) {
            t.insert(cycle[0]);
        }
    });
    t
}
