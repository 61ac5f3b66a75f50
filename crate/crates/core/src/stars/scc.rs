//! Strongly connected components of a star digraph and their concatenation
//! into ordered blocks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::private::BlockLayout;
use super::system::StarDigraph;

/// Strongly connected components as sorted center-index lists, in a
/// topological order of the condensation (arcs go from earlier to later
/// components). Among available components the one with the smallest
/// member comes first.
pub fn strongly_connected_components(d: &StarDigraph) -> Vec<Vec<usize>> {
    let k = d.centers().len();
    let comp_of = tarjan(d);
    let count = comp_of.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut members = vec![Vec::new(); count];
    for (v, &c) in comp_of.iter().enumerate() {
        members[c].push(v);
    }
    let mut indegree = vec![0usize; count];
    let mut succ = vec![Vec::new(); count];
    for u in 0..k {
        for &w in d.successors(u) {
            let (a, b) = (comp_of[u], comp_of[w]);
            if a != b {
                succ[a].push(b);
            }
        }
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
        for &b in s.iter() {
            indegree[b] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..count)
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((members[c][0], c)))
        .collect();
    let mut order = Vec::with_capacity(count);
    while let Some(Reverse((_, c))) = heap.pop() {
        order.push(std::mem::take(&mut members[c]));
        for &b in &succ[c] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                heap.push(Reverse((members[b][0], b)));
            }
        }
    }
    order
}

/// Iterative Tarjan; returns a component id per vertex.
fn tarjan(d: &StarDigraph) -> Vec<usize> {
    let k = d.centers().len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; k];
    let mut low = vec![0; k];
    let mut on_stack = vec![false; k];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; k];
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..k {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = d.successors(v).get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("component members are stacked");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SccBlocks {
    Layout { layout: BlockLayout },
    Infeasible { reason: String },
}

/// Concatenates consecutive components, in topological order, into
/// `blocks` blocks of size in `q_min..=q_max`. A block is filled as far as
/// `q_max` allows and closed once the next component would overflow it.
/// Components past the last block are left out. Blocks hold center
/// vertices; `J` is empty.
pub fn scc_blocks(d: &StarDigraph, q_min: usize, q_max: usize, blocks: usize) -> SccBlocks {
    let infeasible = |reason: String| SccBlocks::Infeasible { reason };
    if q_min > q_max || q_max == 0 {
        return infeasible(format!("empty size range [{q_min}, {q_max}]"));
    }
    let comps = strongly_connected_components(d);
    if let Some(big) = comps.iter().find(|c| c.len() > q_max) {
        return infeasible(format!("a component of size {} exceeds q_max = {q_max}", big.len()));
    }
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(blocks);
    let mut current: Vec<usize> = Vec::new();
    for comp in comps {
        if out.len() == blocks {
            break;
        }
        if current.len() + comp.len() > q_max {
            if current.len() < q_min {
                return infeasible(format!(
                    "block {} holds {} centers and the next component does not fit",
                    out.len() + 1,
                    current.len()
                ));
            }
            out.push(std::mem::take(&mut current));
            if out.len() == blocks {
                break;
            }
        }
        current.extend(comp);
        if current.len() == q_max {
            out.push(std::mem::take(&mut current));
        }
    }
    if out.len() < blocks && current.len() >= q_min && !current.is_empty() {
        out.push(current);
    }
    if out.len() < blocks {
        return infeasible(format!("only {} of {blocks} blocks could be filled", out.len()));
    }
    let layout = BlockLayout {
        j: Vec::new(),
        blocks: out
            .into_iter()
            .map(|b| {
                let mut v: Vec<usize> = b.into_iter().map(|i| d.centers()[i]).collect();
                v.sort_unstable();
                v
            })
            .collect(),
    };
    SccBlocks::Layout { layout }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn digraph(k: usize, arcs: &[(usize, usize)]) -> StarDigraph {
        StarDigraph::from_arcs(k, (0..k).collect(), arcs).unwrap()
    }

    #[test]
    fn components_in_topological_order() {
        let d = digraph(5, &[(3, 4), (4, 3), (4, 0), (0, 1), (1, 2), (2, 1)]);
        assert_eq!(strongly_connected_components(&d), vec![vec![3, 4], vec![0], vec![1, 2]]);
    }

    #[test]
    fn singleton_chain_one_per_block() {
        let arcs: Vec<(usize, usize)> = (0..9).map(|i| (i, i + 1)).collect();
        let SccBlocks::Layout { layout } = scc_blocks(&digraph(10, &arcs), 1, 1, 10) else {
            panic!("feasible");
        };
        assert_eq!(layout.blocks, (0..10).map(|i| vec![i]).collect::<Vec<_>>());
    }

    #[test]
    fn oversized_component_is_infeasible() {
        let d = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(scc_blocks(&d, 1, 2, 1), SccBlocks::Infeasible { .. }));
        assert!(matches!(scc_blocks(&digraph(5, &[]), 1, 1, 10), SccBlocks::Infeasible { .. }));
    }

    #[test]
    fn forty_singletons_fill_ten_blocks_of_four() {
        let SccBlocks::Layout { layout } = scc_blocks(&digraph(40, &[]), 3, 4, 10) else {
            panic!("feasible");
        };
        assert_eq!(layout.blocks.len(), 10);
        for (i, b) in layout.blocks.iter().enumerate() {
            assert_eq!(b, &(4 * i..4 * i + 4).collect::<Vec<_>>());
        }
    }

    proptest! {
        #[test]
        fn blocks_respect_topological_order(
            arcs in proptest::collection::vec((0usize..30, 0usize..30), 0..60),
            q_min in 1usize..4,
            extra in 0usize..4,
            blocks in 1usize..6,
        ) {
            let d = digraph(30, &arcs);
            let comps = strongly_connected_components(&d);
            let mut pos = vec![0; 30];
            for (i, c) in comps.iter().enumerate() {
                for &v in c {
                    pos[v] = i;
                }
            }
            for &(a, b) in &arcs {
                prop_assert!(pos[a] <= pos[b]);
            }
            if let SccBlocks::Layout { layout } = scc_blocks(&d, q_min, q_min + extra, blocks) {
                prop_assert_eq!(layout.blocks.len(), blocks);
                let mut block_of = vec![None; 30];
                for (i, b) in layout.blocks.iter().enumerate() {
                    prop_assert!(b.len() >= q_min && b.len() <= q_min + extra);
                    for &v in b {
                        prop_assert!(block_of[v].is_none());
                        block_of[v] = Some(i);
                    }
                }
                for &(a, b) in &arcs {
                    if let (Some(i), Some(j)) = (block_of[a], block_of[b]) {
                        prop_assert!(i <= j);
                    }
                }
            }
        }
    }
}
