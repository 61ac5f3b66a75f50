//! Maximal clique and maximal independent set enumeration, independence
//! number, and a greedy clique cover usable on large sparse graphs.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All inclusion-maximal cliques, sorted.
///
/// Bron–Kerbosch with pivoting; the pivot is the vertex of `P ∪ X` with the
/// most neighbors in `P`, lowest index on ties.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    cliques_of(&g.neighbor_sets(), g.n())
}

/// All inclusion-maximal independent sets, sorted.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let co: Vec<VertexSet> = g
        .neighbor_sets()
        .into_iter()
        .enumerate()
        .map(|(v, s)| {
            let mut c = s.complement();
            c.remove(v);
            c
        })
        .collect();
    cliques_of(&co, n)
}

fn cliques_of(adj: &[VertexSet], n: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    bron_kerbosch(adj, VertexSet::new(n), VertexSet::full(n), VertexSet::new(n), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(adj: &[VertexSet], r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by(|&a, &b| {
            adj[a]
                .intersection_len(&p)
                .cmp(&adj[b].intersection_len(&p))
                .then(b.cmp(&a))
        })
        .expect("P is non-empty");
    for v in p.difference(&adj[pivot]).to_vec() {
        let mut r2 = r.clone();
        r2.insert(v);
        bron_kerbosch(adj, r2, p.intersection(&adj[v]), x.intersection(&adj[v]), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Independence number, by branch and bound.
pub fn alpha(g: &Graph) -> usize {
    let adj = g.neighbor_sets();
    let mut best = 0;
    mis_branch(&adj, VertexSet::full(g.n()), 0, &mut best);
    best
}

/// A maximum independent set (lexicographically first among those the
/// search meets first).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let adj = g.neighbor_sets();
    let mut best = VertexSet::new(g.n());
    let mut current = VertexSet::new(g.n());
    mis_witness(&adj, VertexSet::full(g.n()), &mut current, &mut best);
    best
}

fn mis_branch(adj: &[VertexSet], mut cand: VertexSet, mut size: usize, best: &mut usize) {
    // Vertices of candidate-degree at most one can always be taken.
    loop {
        let low = cand.iter().find(|&v| adj[v].intersection_len(&cand) <= 1);
        match low {
            Some(v) => {
                size += 1;
                cand.difference_with(&adj[v]);
                cand.remove(v);
            }
            None => break,
        }
    }
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + cand.len() <= *best {
        return;
    }
    let v = cand
        .iter()
        .max_by(|&a, &b| adj[a].intersection_len(&cand).cmp(&adj[b].intersection_len(&cand)).then(b.cmp(&a)))
        .expect("non-empty");
    let mut with_v = cand.difference(&adj[v]);
    with_v.remove(v);
    mis_branch(adj, with_v, size + 1, best);
    cand.remove(v);
    mis_branch(adj, cand, size, best);
}

fn mis_witness(adj: &[VertexSet], mut cand: VertexSet, current: &mut VertexSet, best: &mut VertexSet) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + cand.len() <= best.len() {
        return;
    }
    let v = cand.first().expect("non-empty");
    let mut with_v = cand.difference(&adj[v]);
    with_v.remove(v);
    current.insert(v);
    mis_witness(adj, with_v, current, best);
    current.remove(v);
    cand.remove(v);
    // Skipping v only helps if some neighbor of v is still available.
    if adj[v].intersects(&cand) {
        mis_witness(adj, cand, current, best);
    }
}

/// Greedy first-fit partition of the vertices into cliques, scanning
/// vertices in index order. Equivalent to first-fit coloring of the
/// complement; the number of parts bounds the independence number from above.
///
/// Runs on neighbor lists, so it is cheap on large sparse graphs.
pub fn greedy_clique_cover(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut hits: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        hits.clear();
        for &u in g.neighbors(v) {
            let u = u as usize;
            if u < v {
                hits.push((part_of[u], 1));
            }
        }
        hits.sort_unstable();
        let mut chosen = None;
        let mut i = 0;
        while i < hits.len() {
            let part = hits[i].0;
            let mut count = 0;
            while i < hits.len() && hits[i].0 == part {
                count += 1;
                i += 1;
            }
            if count == parts[part].len() {
                chosen = Some(part);
                break;
            }
        }
        let part = chosen.unwrap_or_else(|| {
            parts.push(Vec::new());
            parts.len() - 1
        });
        parts[part].push(v);
        part_of[v] = part;
    }
    parts
}
