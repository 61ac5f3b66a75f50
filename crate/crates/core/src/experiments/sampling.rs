//! Random graphs `G(n, p)` and random bipartite graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Calls `hit` with the indices in `0..total` selected independently with
/// probability `p`, in increasing order, by geometric skipping.
fn bernoulli_indices<R: Rng + ?Sized>(total: u64, p: f64, rng: &mut R, mut hit: impl FnMut(u64)) {
    if total == 0 || p <= 0.0 {
        return;
    }
    if p >= 1.0 {
        (0..total).for_each(hit);
        return;
    }
    let log_q = (-p).ln_1p();
    let mut i: u64 = 0;
    loop {
        let r: f64 = rng.gen();
        let skip = ((-r).ln_1p() / log_q).floor();
        if skip >= (total - i) as f64 {
            return;
        }
        i += skip as u64;
        hit(i);
        i += 1;
        if i >= total {
            return;
        }
    }
}

/// Each of the `n(n-1)/2` pairs is an edge independently with probability `p`.
pub fn sample_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let total = (n as u64) * (n as u64).saturating_sub(1) / 2;
    // Pair index k enumerates (u, v), u < v, column by column: k = v(v-1)/2 + u.
    let mut v: u64 = 1;
    let mut base: u64 = 0;
    bernoulli_indices(total, p, rng, |k| {
        while k >= base + v {
            base += v;
            v += 1;
        }
        let u = (k - base) as usize;
        adj[u].push(v as u32);
        adj[v as usize].push(u as u32);
    });
    Graph::from_raw_lists(adj)
}

/// A triangle-free graph: pairs are visited in random order and each is
/// kept with probability `p` unless it would close a triangle.
pub fn sample_triangle_free<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    pairs.shuffle(rng);
    let mut nbrs = vec![crate::vertex_set::VertexSet::new(n); n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if rng.gen_bool(p.clamp(0.0, 1.0)) && !nbrs[u].intersects(&nbrs[v]) {
            nbrs[u].insert(v);
            nbrs[v].insert(u);
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// A bipartite graph with sides `A = 0..a` and `B = 0..b`, stored as sorted
/// neighbor lists of the `A` side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    b: usize,
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl BipartiteGraph {
    pub fn from_edges(a: usize, b: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); a];
        for (x, y) in edges {
            assert!(x < a && y < b, "edge ({x},{y}) outside the sides");
            adj[x].push(y as u32);
        }
        let mut m = 0;
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
            m += l.len();
        }
        Self { b, adj, m }
    }

    pub fn complete(a: usize, b: usize) -> Self {
        Self::from_edges(a, b, (0..a).flat_map(|x| (0..b).map(move |y| (x, y))))
    }

    pub fn a_len(&self) -> usize {
        self.adj.len()
    }

    pub fn b_len(&self) -> usize {
        self.b
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, x: usize) -> &[u32] {
        &self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].binary_search(&(y as u32)).is_ok()
    }

    pub fn b_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.b];
        for l in &self.adj {
            for &y in l {
                deg[y as usize] += 1;
            }
        }
        deg
    }
}

/// Each of the `a * b` cross pairs is an edge independently with probability `p`.
pub fn sample_bipartite<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> BipartiteGraph {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); a];
    let mut m = 0;
    if b > 0 {
        bernoulli_indices(a as u64 * b as u64, p, rng, |k| {
            adj[(k / b as u64) as usize].push((k % b as u64) as u32);
            m += 1;
        });
    }
    BipartiteGraph { b, adj, m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::rng::trial_rng;

    #[test]
    fn extreme_probabilities() {
        let mut rng = trial_rng(1, 0);
        assert_eq!(sample_gnp(30, 0.0, &mut rng), Graph::empty(30));
        assert_eq!(sample_gnp(30, 1.0, &mut rng), Graph::complete(30));
        assert_eq!(sample_gnp(0, 0.5, &mut rng), Graph::empty(0));
        assert_eq!(sample_bipartite(5, 7, 0.0, &mut rng).edge_count(), 0);
        assert_eq!(sample_bipartite(5, 7, 1.0, &mut rng), BipartiteGraph::complete(5, 7));
    }

    #[test]
    fn gnp_edge_count_concentrates() {
        // 1000 samples of G(200, 0.1): the mean edge count has standard error
        // sqrt(N p (1-p) / 1000) with N = C(200, 2).
        let pairs: f64 = 200.0 * 199.0 / 2.0;
        let total: usize = (0..1000)
            .map(|t| sample_gnp(200, 0.1, &mut trial_rng(5, t)).edge_count())
            .sum();
        let mean = total as f64 / 1000.0;
        let se = (pairs * 0.1 * 0.9 / 1000.0).sqrt();
        assert!((mean - pairs * 0.1).abs() < 3.0 * se, "mean {mean}");
    }

    #[test]
    fn bipartite_edge_count_concentrates() {
        let cells: f64 = 300.0 * 200.0;
        let total: usize = (0..200)
            .map(|t| sample_bipartite(300, 200, 0.05, &mut trial_rng(6, t)).edge_count())
            .sum();
        let mean = total as f64 / 200.0;
        let se = (cells * 0.05 * 0.95 / 200.0).sqrt();
        assert!((mean - cells * 0.05).abs() < 3.0 * se, "mean {mean}");
    }

    #[test]
    fn gnp_pair_frequencies_are_uniform() {
        // Every pair of a 6-vertex graph should appear with frequency near p.
        let trials = 4000;
        let mut hits = vec![0usize; 15];
        for t in 0..trials {
            let g = sample_gnp(6, 0.3, &mut trial_rng(9, t));
            assert!(g.check_invariants());
            for (u, v) in g.edges() {
                hits[v * (v - 1) / 2 + u] += 1;
            }
        }
        let se = (0.3 * 0.7 / trials as f64).sqrt();
        for h in hits {
            assert!((h as f64 / trials as f64 - 0.3).abs() < 4.0 * se);
        }
    }

    #[test]
    fn triangle_free_sampler() {
        for t in 0..50 {
            let g = sample_triangle_free(12, 0.5, &mut trial_rng(3, t));
            assert!(g.is_triangle_free());
        }
    }
}
