//! Simple undirected graphs on dense vertex labels.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and symmetric, with no self-loops. The
/// small-graph algorithms work on [`Graph::neighbor_sets`]; the random-graph
/// experiments work on the lists directly, which keeps graphs with `10^5`
/// vertices cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&u| u as usize != v).collect())
            .collect();
        Self {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Self::from_raw_lists(adj))
    }

    /// Sorts and dedups lists assumed to be symmetric and loop-free.
    pub(crate) fn from_raw_lists(mut adj: Vec<Vec<u32>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Self { adj, m: twice / 2 }
    }

    /// Builds a graph from per-vertex neighbor bitsets.
    pub fn from_neighbor_sets(sets: &[VertexSet]) -> Result<Self> {
        let n = sets.len();
        let mut edges = Vec::new();
        for (v, s) in sets.iter().enumerate() {
            if s.universe() != n {
                return Err(Error::invalid("neighbor set universe differs from vertex count"));
            }
            for u in s.iter() {
                if u == v {
                    return Err(Error::SelfLoop(v));
                }
                if !sets[u].contains(v) {
                    return Err(Error::invalid(format!("asymmetric adjacency between {v} and {u}")));
                }
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        Self::from_edges(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_members(self.n(), self.adj[v].iter().map(|&u| u as usize))
    }

    pub fn neighbor_sets(&self) -> Vec<VertexSet> {
        (0..self.n()).map(|v| self.neighbor_set(v)).collect()
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members = set.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// First edge inside `set`, if any.
    pub fn edge_within(&self, set: &VertexSet) -> Option<(usize, usize)> {
        set.iter().find_map(|u| {
            self.adj[u]
                .iter()
                .map(|&v| v as usize)
                .find(|&v| u < v && set.contains(v))
                .map(|v| (u, v))
        })
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.edge_within(set).is_none()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut out = Vec::with_capacity(n - 1 - self.degree(v));
                let mut it = self.adj[v].iter().peekable();
                for u in 0..n as u32 {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u as usize != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Self::from_raw_lists(adj)
    }

    /// The co-normal (OR) product: `(a1, b1) ~ (a2, b2)` iff `a1 ~ a2` in
    /// `self` or `b1 ~ b2` in `other`. Vertex `(a, b)` gets index `a * other.n() + b`.
    pub fn co_normal_product(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut adj = vec![Vec::new(); n1 * n2];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                let list = &mut adj[a1 * n2 + b1];
                for a2 in 0..n1 {
                    let first = a1 != a2 && self.has_edge(a1, a2);
                    for b2 in 0..n2 {
                        if (a1, b1) != (a2, b2) && (first || other.has_edge(b1, b2)) {
                            list.push((a2 * n2 + b2) as u32);
                        }
                    }
                }
            }
        }
        Self::from_raw_lists(adj)
    }

    /// The subgraph induced by `keep`, relabeled to `0..keep.len()` in
    /// ascending order. The second component maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let mapping: Vec<usize> = keep.iter().collect();
        let mut new_label = vec![u32::MAX; self.n()];
        for (i, &v) in mapping.iter().enumerate() {
            new_label[v] = i as u32;
        }
        let adj = mapping
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .map(|&u| new_label[u as usize])
                    .filter(|&u| u != u32::MAX)
                    .collect()
            })
            .collect();
        (Self::from_raw_lists(adj), mapping)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u as usize] {
                        seen[u as usize] = true;
                        comp.push(u as usize);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Checks the structural invariants: symmetry, no loops, labels in range.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&u| {
                    (u as usize) < n && u as usize != v && self.adj[u as usize].binary_search(&(v as u32)).is_ok()
                })
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}
