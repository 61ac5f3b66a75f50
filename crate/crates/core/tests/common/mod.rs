//! Brute-force oracles shared by the integration tests. Everything here works
//! on adjacency bitmasks and is independent of the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use normgraph::Graph;

/// Labeled graph on `n` vertices; bit `k` of `mask` is the `k`-th pair in
/// the order (0,1), (0,2), .., (1,2), ..
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask))
}

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn is_clique_mask(adj: &[u64], s: u64) -> bool {
    (0..adj.len()).filter(|v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !adj[v] == 0)
}

fn is_independent_mask(adj: &[u64], s: u64) -> bool {
    (0..adj.len()).filter(|v| s >> v & 1 == 1).all(|v| s & adj[v] == 0)
}

/// Normality by search over all clique families, maximal or not.
///
/// Cliques are added one at a time, each covering the lowest vertex not yet
/// covered, and the independent sets meeting every chosen clique are kept
/// as a bitmask. Adding a clique can only shrink that family, so a branch
/// dies once the survivors stop covering the vertices.
pub fn naive_is_normal(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 7, "oracle is for tiny graphs");
    if n == 0 {
        return true;
    }
    let adj = adjacency(g);
    let subsets: Vec<u64> = (1..1u64 << n).collect();
    let cliques: Vec<u64> = subsets.iter().copied().filter(|&s| is_clique_mask(&adj, s)).collect();
    let indeps: Vec<u64> = subsets.iter().copied().filter(|&s| is_independent_mask(&adj, s)).collect();
    let meets: Vec<u128> = cliques
        .iter()
        .map(|&c| {
            indeps
                .iter()
                .enumerate()
                .filter(|&(_, &s)| s & c != 0)
                .fold(0u128, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let full = (1u64 << n) - 1;
    let union_of = |alive: u128| {
        (0..indeps.len()).filter(|i| alive >> i & 1 == 1).fold(0u64, |u, i| u | indeps[i])
    };
    fn go(
        covered: u64,
        alive: u128,
        full: u64,
        cliques: &[u64],
        meets: &[u128],
        union_of: &dyn Fn(u128) -> u64,
    ) -> bool {
        if union_of(alive) != full {
            return false;
        }
        if covered == full {
            return true;
        }
        let v = (!covered).trailing_zeros();
        cliques.iter().zip(meets).any(|(&c, &m)| {
            c >> v & 1 == 1 && go(covered | c, alive & m, full, cliques, meets, union_of)
        })
    }
    let all = if indeps.len() == 128 { u128::MAX } else { (1u128 << indeps.len()) - 1 };
    go(0, all, full, &cliques, &meets, &union_of)
}

/// Independence number by exhaustive search over subsets (n <= 20).
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj = adjacency(g);
    fn go(adj: &[u64], cand: u64) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let without = go(adj, cand & !(1 << v));
        let with = 1 + go(adj, cand & !(1 << v) & !adj[v]);
        without.max(with)
    }
    go(&adj, (1u64 << n) - 1)
}

/// A certificate checked straight from the definition.
pub fn certifies(g: &Graph, cliques: &[Vec<usize>], indeps: &[Vec<usize>]) -> bool {
    let n = g.n();
    let pairwise = |s: &[usize], adjacent: bool| {
        s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v) == adjacent))
    };
    let covers = |fam: &[Vec<usize>]| (0..n).all(|v| fam.iter().any(|s| s.contains(&v)));
    cliques.iter().all(|c| pairwise(c, true))
        && indeps.iter().all(|s| pairwise(s, false))
        && covers(cliques)
        && covers(indeps)
        && cliques.iter().all(|c| indeps.iter().all(|s| c.iter().any(|v| s.contains(v))))
}

fn induced_is_cycle(adj: &[u64], s: u64) -> bool {
    let k = s.count_ones();
    let members: Vec<usize> = (0..adj.len()).filter(|v| s >> v & 1 == 1).collect();
    if members.iter().any(|&v| (adj[v] & s).count_ones() != 2) {
        return false;
    }
    // 2-regular and connected means a single cycle.
    let mut seen = 1u64 << members[0];
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let next = adj[v] & s & !seen;
        seen |= next;
        frontier |= next;
    }
    seen.count_ones() == k
}

/// Whether `g` has an induced C5, C7 or complement of C7. For at most eight
/// vertices these are the only odd holes and antiholes, so their absence
/// means the graph is perfect.
pub fn has_odd_hole_or_antihole(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 8);
    let adj = adjacency(g);
    let full = (1u64 << n) - 1;
    let co: Vec<u64> = (0..n).map(|v| !adj[v] & full & !(1 << v)).collect();
    (0..1u64 << n).any(|s| match s.count_ones() {
        5 => induced_is_cycle(&adj, s),
        7 => induced_is_cycle(&adj, s) || induced_is_cycle(&co, s),
        _ => false,
    })
}

/// Whether `g` has a cycle of length at most `len`, by breadth-first search
/// from every vertex up to depth `len / 2`.
pub fn has_cycle_at_most(g: &Graph, len: usize) -> bool {
    let n = g.n();
    let depth = len / 2;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for root in 0..n {
        for &v in &touched {
            dist[v] = usize::MAX;
        }
        touched.clear();
        dist[root] = 0;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    if dist[u] < depth {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    }
                } else if parent[u] != w && dist[u] + dist[w] < len {
                    return true;
                }
            }
        }
    }
    false
}

fn tree_code(children: &[Vec<usize>], v: usize) -> String {
    let mut codes: Vec<String> = children[v].iter().map(|&c| tree_code(children, c)).collect();
    codes.sort();
    format!("({})", codes.concat())
}

/// Canonical string of a tree: the smallest rooted code over its centers.
fn canonical_tree(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let ecc = |r: usize| {
        let mut d = vec![usize::MAX; n];
        d[r] = 0;
        let mut q = VecDeque::from([r]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if d[w] == usize::MAX {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
            }
        }
        d.into_iter().max().unwrap()
    };
    let eccs: Vec<usize> = (0..n).map(ecc).collect();
    let best = *eccs.iter().min().unwrap();
    (0..n)
        .filter(|&r| eccs[r] == best)
        .map(|r| {
            let mut children = vec![Vec::new(); n];
            let mut seen = vec![false; n];
            seen[r] = true;
            let mut q = VecDeque::from([r]);
            while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        children[u].push(w);
                        q.push_back(w);
                    }
                }
            }
            tree_code(&children, r)
        })
        .min()
        .unwrap()
}

/// One representative of every unlabeled tree on `n` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut layer: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &layer {
            for attach in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((attach, size - 1));
                if seen.insert(canonical_tree(size, &grown)) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().map(|e| Graph::from_edges(n, e).unwrap()).collect()
}
