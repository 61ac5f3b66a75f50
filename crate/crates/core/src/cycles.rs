//! Girth and enumeration of short cycles.

use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Length of a shortest cycle. Forests have [`Girth::Unbounded`] girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Unbounded,
}

impl Girth {
    /// True iff every cycle has length at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Unbounded => true,
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Unbounded => s.serialize_none(),
        }
    }
}

/// Exact girth by breadth-first search from every vertex.
///
/// A search from a root stops as soon as the current depth can no longer
/// produce a cycle shorter than the best one found, so on sparse graphs of
/// moderate girth the total work stays near-linear.
pub fn girth(g: &Graph) -> Girth {
    match shortest_cycle_below(g, usize::MAX) {
        Some(len) => Girth::Finite(len),
        None => Girth::Unbounded,
    }
}

/// True iff `g` has no cycle of length at most `bound`.
///
/// Cheaper than [`girth`] on large sparse graphs, since every search is
/// capped at depth about `bound / 2`.
pub fn girth_exceeds(g: &Graph, bound: usize) -> bool {
    shortest_cycle_below(g, bound.saturating_add(1)).is_none()
}

/// Length of a shortest cycle, if one is shorter than `limit`.
fn shortest_cycle_below(g: &Graph, limit: usize) -> Option<usize> {
    let n = g.n();
    let mut best = limit;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if best == 3 {
            break;
        }
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u] as usize;
            if 2 * du + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = du as u32 + 1;
                    parent[w] = u as u32;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w as u32 {
                    best = best.min(du + dist[w] as usize + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        queue.clear();
        for &v in &touched {
            dist[v] = u32::MAX;
            parent[v] = u32::MAX;
        }
        touched.clear();
    }
    (best < limit).then_some(best)
}

/// Calls `visit` once per cycle of length at most `max_len`, as a subgraph.
///
/// Each cycle is reported as its vertex sequence starting at its smallest
/// vertex, oriented so that the second vertex is smaller than the last.
/// Reporting order is deterministic.
pub fn for_each_short_cycle<F: FnMut(&[usize])>(g: &Graph, max_len: usize, mut visit: F) {
    assert!(max_len >= 3, "cycles have length at least 3");
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
    }
}

fn extend<F: FnMut(&[usize])>(
    g: &Graph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) {
    let last = *path.last().expect("path holds the start");
    for &w in g.neighbors(last) {
        let w = w as usize;
        if w == start {
            if path.len() >= 3 && path[1] < last {
                visit(path);
            }
            continue;
        }
        if w < start || on_path[w] || path.len() == max_len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend(g, start, max_len, path, on_path, visit);
        on_path[w] = false;
        path.pop();
    }
}

/// Number of distinct cycles (as subgraphs) of length at most `max_len`.
pub fn count_short_cycles(g: &Graph, max_len: usize) -> u64 {
    let mut count = 0;
    for_each_short_cycle(g, max_len, |_| count += 1);
    count
}

/// All cycles of length at most `max_len`, in the order of [`for_each_short_cycle`].
pub fn short_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_short_cycle(g, max_len, |c| out.push(c.to_vec()));
    out
}
