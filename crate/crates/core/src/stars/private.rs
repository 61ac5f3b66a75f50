//! Private star systems over ordered blocks of centers, and the JQ check.
//!
//! A vertex `w` outside `J` and the blocks is a private neighbor of `v` in
//! block `i` when `v` is its only neighbor in blocks `1..=i`. Such `w` has
//! at most one owner: the unique neighbor in the first block it touches.

use serde::{Deserialize, Serialize};

use super::system::{build_digraph, StarSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An excluded set `J` and ordered, pairwise disjoint blocks of centers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLayout {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl BlockLayout {
    /// Block index of every vertex (`None` outside the blocks); `J` is marked
    /// in the second vector.
    fn classify(&self, n: usize) -> Result<(Vec<Option<usize>>, Vec<bool>)> {
        let mut block = vec![None; n];
        let mut excluded = vec![false; n];
        let all = self
            .j
            .iter()
            .map(|&v| (v, None))
            .chain(self.blocks.iter().enumerate().flat_map(|(b, q)| q.iter().map(move |&v| (v, Some(b)))));
        for (v, b) in all {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut excluded[v], true) {
                return Err(Error::invalid(format!("vertex {v} appears twice in the block layout")));
            }
            block[v] = b;
        }
        Ok((block, excluded))
    }

    pub fn center_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Stars whose centers are the block vertices, in block order, and whose
/// leaves are their private neighbors outside `J` and the blocks.
pub fn private_star_system(g: &Graph, layout: &BlockLayout) -> Result<StarSystem> {
    let n = g.n();
    let (block, excluded) = layout.classify(n)?;
    let centers: Vec<usize> = layout.blocks.iter().flatten().copied().collect();
    let mut index = vec![usize::MAX; n];
    for (i, &c) in centers.iter().enumerate() {
        index[c] = i;
    }
    let mut leaves = vec![Vec::new(); centers.len()];
    for w in (0..n).filter(|&w| !excluded[w]) {
        let mut first: Option<(usize, usize)> = None;
        let mut unique = false;
        for &u in g.neighbors(w) {
            let u = u as usize;
            let Some(b) = block[u] else { continue };
            match first {
                Some((fb, _)) if b > fb => {}
                Some((fb, _)) if b == fb => unique = false,
                _ => {
                    first = Some((b, u));
                    unique = true;
                }
            }
        }
        if let (Some((_, owner)), true) = (first, unique) {
            leaves[index[owner]].push(w);
        }
    }
    StarSystem::new(g, centers, leaves)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JqWitness {
    pub start: usize,
    pub outsection: Vec<usize>,
    pub private_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JqOutcome {
    pub satisfied: bool,
    pub threshold: usize,
    /// The out-section with the most private neighbors, lowest start center
    /// on ties. Absent only when the layout has no centers.
    pub witness: Option<JqWitness>,
}

/// Finds the out-section of the private star system with the largest total
/// number of private neighbors and compares it with `threshold`.
pub fn check_jq(g: &Graph, layout: &BlockLayout, threshold: usize) -> Result<JqOutcome> {
    let sys = private_star_system(g, layout)?;
    let d = build_digraph(g, &sys);
    let mut best: Option<JqWitness> = None;
    for i in 0..sys.len() {
        let reach = d.reachable(i);
        let total = reach.iter().map(|&j| sys.leaves(j).len()).sum();
        let start = sys.centers()[i];
        let better = match &best {
            None => true,
            Some(b) => total > b.private_total || (total == b.private_total && start < b.start),
        };
        if better {
            let mut outsection: Vec<usize> = reach.iter().map(|&j| sys.centers()[j]).collect();
            outsection.sort_unstable();
            best = Some(JqWitness {
                start,
                outsection,
                private_total: total,
            });
        }
    }
    let max = best.as_ref().map_or(0, |w| w.private_total);
    Ok(JqOutcome {
        satisfied: max >= threshold,
        threshold,
        witness: best,
    })
}
