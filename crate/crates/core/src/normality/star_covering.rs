//! Reduction of a normal certificate of a triangle-free graph to a star
//! covering: cliques become single edges and singletons whose edges form a
//! spanning union of vertex-disjoint stars.

use serde::Serialize;

use super::certificate::{verify_certificate, NormalCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCovering {
    pub certificate: NormalCertificate,
    /// Sorted by center.
    pub stars: Vec<Star>,
    pub centers: VertexSet,
}

#[derive(Serialize)]
struct StarCoveringFile<'a> {
    cliques: Vec<Vec<usize>>,
    independents: Vec<Vec<usize>>,
    centers: Vec<usize>,
    stars: &'a [Star],
}

impl StarCovering {
    pub fn to_json(&self) -> serde_json::Value {
        let file = self.certificate.to_file();
        serde_json::to_value(StarCoveringFile {
            cliques: file.cliques,
            independents: file.independents,
            centers: self.centers.to_vec(),
            stars: &self.stars,
        })
        .expect("plain data serializes")
    }

    /// Re-derives every star-covering condition from scratch; returns the
    /// first defect found.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if !verify_certificate(g, &self.certificate).map_err(|e| e.to_string())?.is_valid() {
            return Err("underlying certificate is not valid".into());
        }
        let cliques = &self.certificate.cliques;
        if let Some(c) = cliques.iter().find(|c| c.is_empty() || c.len() > 2) {
            return Err(format!("clique {c:?} is not a K1 or K2"));
        }
        for k1 in cliques.iter().filter(|c| c.len() == 1) {
            if cliques.iter().any(|c| c.len() == 2 && k1.is_subset(c)) {
                return Err(format!("K1 {k1:?} lies inside a K2"));
            }
        }
        let mut owner = vec![usize::MAX; n];
        for (i, star) in self.stars.iter().enumerate() {
            for v in std::iter::once(star.center).chain(star.leaves.iter().copied()) {
                if v >= n || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} is out of range or in two stars"));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(format!("vertex {v} lies in no star"));
        }
        let mut star_edges: Vec<VertexSet> = Vec::new();
        let mut singles: Vec<VertexSet> = Vec::new();
        for star in &self.stars {
            if star.leaves.is_empty() {
                singles.push(VertexSet::from_members(n, [star.center]));
            }
            for &l in &star.leaves {
                star_edges.push(VertexSet::from_members(n, [star.center, l]));
            }
        }
        let mut expected: Vec<VertexSet> = star_edges.into_iter().chain(singles).collect();
        expected.sort();
        let mut actual = cliques.clone();
        actual.sort();
        if expected != actual {
            return Err("cliques do not match the star edges and trivial stars".into());
        }
        let centers = VertexSet::from_members(n, self.stars.iter().map(|s| s.center));
        if centers != self.centers {
            return Err("center set does not match the stars".into());
        }
        Ok(())
    }
}

/// Turns a valid certificate of a triangle-free graph into a star covering.
///
/// Singletons inside an edge member are dropped. Then, repeatedly, the
/// lexicographically smallest edge member whose endpoints both lie in at
/// least two edge members is deleted. What remains is a spanning union of
/// vertex-disjoint stars, each a center with its leaves, and the number of
/// stars is at most the independence number. A two-vertex star is centered
/// at its lower endpoint.
pub fn to_star_covering(g: &Graph, cert: &NormalCertificate) -> Result<StarCovering> {
    let n = g.n();
    if !g.is_triangle_free() {
        return Err(Error::invalid("star coverings need a triangle-free graph"));
    }
    if !verify_certificate(g, cert)?.is_valid() {
        return Err(Error::invalid("certificate does not verify against the graph"));
    }
    let mut edges: Vec<(usize, usize)> = cert
        .cliques
        .iter()
        .filter(|c| c.len() == 2)
        .map(|c| {
            let v = c.to_vec();
            (v[0], v[1])
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    // Degrees only fall, so an edge that is not deletable now never becomes
    // deletable later: one ascending pass deletes exactly what repeated
    // smallest-first deletion would.
    edges.retain(|&(u, v)| {
        if degree[u] >= 2 && degree[v] >= 2 {
            degree[u] -= 1;
            degree[v] -= 1;
            false
        } else {
            true
        }
    });
    let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut is_center = vec![false; n];
    for &(u, v) in &edges {
        let (c, l) = if degree[v] >= 2 { (v, u) } else { (u, v) };
        is_center[c] = true;
        leaves[c].push(l);
    }
    let mut cliques: Vec<VertexSet> = edges
        .iter()
        .map(|&(u, v)| VertexSet::from_members(n, [u, v]))
        .collect();
    for v in (0..n).filter(|&v| degree[v] == 0) {
        is_center[v] = true;
        cliques.push(VertexSet::from_members(n, [v]));
    }
    let stars: Vec<Star> = (0..n)
        .filter(|&v| is_center[v])
        .map(|v| {
            let mut l = std::mem::take(&mut leaves[v]);
            l.sort_unstable();
            Star { center: v, leaves: l }
        })
        .collect();
    let centers = VertexSet::from_members(n, stars.iter().map(|s| s.center));
    let mut certificate = NormalCertificate {
        cliques,
        independents: cert.independents.clone(),
    };
    certificate.canonicalize();
    Ok(StarCovering {
        certificate,
        stars,
        centers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::alpha;

    fn c6_all_edges() -> (Graph, NormalCertificate) {
        let g = Graph::cycle(6);
        let cliques: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
        let cert = NormalCertificate::from_lists(6, &cliques, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        (g, cert)
    }

    #[test]
    fn c6_reduction_trace() {
        let (g, cert) = c6_all_edges();
        let sc = to_star_covering(&g, &cert).unwrap();
        // Deletion order: (0,1), (2,3), (4,5); the survivors are a perfect matching.
        let kept: Vec<Vec<usize>> = sc.certificate.cliques.iter().map(VertexSet::to_vec).collect();
        assert_eq!(kept, vec![vec![0, 5], vec![1, 2], vec![3, 4]]);
        assert_eq!(sc.centers.to_vec(), vec![0, 1, 3]);
        assert!(sc.stars.len() <= alpha(&g));
        sc.validate(&g).unwrap();
    }

    #[test]
    fn star_form_is_a_fixpoint() {
        let (g, cert) = c6_all_edges();
        let once = to_star_covering(&g, &cert).unwrap();
        let twice = to_star_covering(&g, &once.certificate).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn path_becomes_one_star() {
        let g = Graph::path(3);
        let cert = NormalCertificate::from_lists(3, &[vec![0, 1], vec![1, 2]], &[vec![0, 2], vec![1]]).unwrap();
        let sc = to_star_covering(&g, &cert).unwrap();
        assert_eq!(sc.stars, vec![Star { center: 1, leaves: vec![0, 2] }]);
        sc.validate(&g).unwrap();
    }

    #[test]
    fn isolated_vertices_are_trivial_stars() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let cert = NormalCertificate::from_lists(3, &[vec![0, 1], vec![2]], &[vec![0, 2], vec![1, 2]]).unwrap();
        let sc = to_star_covering(&g, &cert).unwrap();
        assert_eq!(
            sc.stars,
            vec![Star { center: 0, leaves: vec![1] }, Star { center: 2, leaves: vec![] }]
        );
        let json = sc.to_json();
        assert_eq!(json["centers"], serde_json::json!([0, 2]));
    }

    #[test]
    fn rejects_bad_input() {
        let k3 = Graph::complete(3);
        let cert = NormalCertificate::from_lists(3, &[vec![0, 1, 2]], &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(to_star_covering(&k3, &cert).is_err());
        let (g, mut cert) = c6_all_edges();
        cert.independents.pop();
        assert!(to_star_covering(&g, &cert).is_err());
    }
}
