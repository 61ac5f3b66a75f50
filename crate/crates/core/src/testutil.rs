use proptest::prelude::*;

use crate::graph::Graph;

/// Uniform labeled graphs on at most `max_n` vertices.
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Labeled graph whose upper-triangle adjacency (column order) is `bits`.
pub(crate) fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Graph on `n` vertices whose edge set is encoded by the low bits of `mask`.
pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
    graph_from_bits(n, &bits)
}
