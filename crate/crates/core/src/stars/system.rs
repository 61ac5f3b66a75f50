use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::normality::StarCovering;
use crate::vertex_set::VertexSet;

/// Vertex-disjoint stars with designated centers. Stars may be trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarSystem {
    n: usize,
    centers: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

impl StarSystem {
    /// Checks disjointness and center-leaf adjacency; leaf lists are sorted.
    pub fn new(g: &Graph, centers: Vec<usize>, mut leaves: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.n();
        if centers.len() != leaves.len() {
            return Err(Error::invalid("one leaf list is needed per center"));
        }
        let mut used = vec![false; n];
        for (i, &c) in centers.iter().enumerate() {
            for &v in std::iter::once(&c).chain(&leaves[i]) {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut used[v], true) {
                    return Err(Error::invalid(format!("vertex {v} lies in two stars")));
                }
            }
            if let Some(&l) = leaves[i].iter().find(|&&l| !g.has_edge(c, l)) {
                return Err(Error::invalid(format!("leaf {l} is not adjacent to its center {c}")));
            }
        }
        for l in &mut leaves {
            l.sort_unstable();
        }
        Ok(Self { n, centers, leaves })
    }

    pub fn from_star_covering(sc: &StarCovering) -> Self {
        Self {
            n: sc.centers.universe(),
            centers: sc.stars.iter().map(|s| s.center).collect(),
            leaves: sc.stars.iter().map(|s| s.leaves.clone()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn centers(&self) -> &[usize] {
        &self.centers
    }

    /// Leaves of the `i`-th star.
    pub fn leaves(&self, i: usize) -> &[usize] {
        &self.leaves[i]
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn index_of(&self, center: usize) -> Option<usize> {
        self.centers.iter().position(|&c| c == center)
    }
}

/// Digraph on the centers of a star system with an arc `x -> y` whenever a
/// leaf of `x`'s star is adjacent to `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDigraph {
    n: usize,
    centers: Vec<usize>,
    /// Out-neighbors by center index, ascending.
    out: Vec<Vec<usize>>,
}

impl StarDigraph {
    /// Builds a digraph directly from center indices and arcs.
    pub fn from_arcs(n: usize, centers: Vec<usize>, arcs: &[(usize, usize)]) -> Result<Self> {
        let k = centers.len();
        if let Some(&v) = centers.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut out = vec![Vec::new(); k];
        for &(i, j) in arcs {
            if i >= k || j >= k {
                return Err(Error::invalid(format!("arc ({i},{j}) refers to a missing center index")));
            }
            if i != j {
                out[i].push(j);
            }
        }
        for o in &mut out {
            o.sort_unstable();
            o.dedup();
        }
        Ok(Self { n, centers, out })
    }

    pub fn centers(&self) -> &[usize] {
        &self.centers
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    /// Arcs as center vertex pairs, in ascending order of center index.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, o)| o.iter().map(move |&j| (self.centers[i], self.centers[j])))
            .collect()
    }

    pub fn index_of(&self, center: usize) -> Option<usize> {
        self.centers.iter().position(|&c| c == center)
    }

    /// Center indices reachable from index `i`, including `i`, ascending.
    pub(crate) fn reachable(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.centers.len()];
        let mut stack = vec![i];
        seen[i] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.out[u] {
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        (0..seen.len()).filter(|&j| seen[j]).collect()
    }
}

pub fn build_digraph(g: &Graph, sys: &StarSystem) -> StarDigraph {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &c) in sys.centers.iter().enumerate() {
        index[c] = i;
    }
    let out = (0..sys.len())
        .map(|i| {
            let mut o: Vec<usize> = sys.leaves[i]
                .iter()
                .flat_map(|&l| g.neighbors(l))
                .map(|&u| index[u as usize])
                .filter(|&j| j != usize::MAX && j != i)
                .collect();
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();
    StarDigraph {
        n: g.n(),
        centers: sys.centers.clone(),
        out,
    }
}

/// Centers reachable from `center` by directed paths, including itself.
pub fn out_section(d: &StarDigraph, center: usize) -> Result<VertexSet> {
    let i = d
        .index_of(center)
        .ok_or_else(|| Error::invalid(format!("{center} is not a center of the digraph")))?;
    Ok(VertexSet::from_members(d.n, d.reachable(i).into_iter().map(|j| d.centers[j])))
}
