use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A clique family and an independent-set family over the same vertex set.
///
/// The pair witnesses normality when both families cover the vertices,
/// every clique member induces a clique, every independent member induces
/// an independent set, and every clique meets every independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalCertificate {
    pub cliques: Vec<VertexSet>,
    pub independents: Vec<VertexSet>,
}

/// On-disk shape: `{"cliques": [[..]..], "independents": [[..]..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub cliques: Vec<Vec<usize>>,
    pub independents: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotClique { index: usize, missing_edge: (usize, usize) },
    NotIndependent { index: usize, edge: (usize, usize) },
    UncoveredByCliques { vertex: usize },
    UncoveredByIndependents { vertex: usize },
    Disjoint { clique: usize, independent: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "violations")]
pub enum Verification {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

impl NormalCertificate {
    /// Builds a certificate over `n` vertices from member lists.
    pub fn from_lists(n: usize, cliques: &[Vec<usize>], independents: &[Vec<usize>]) -> Result<Self> {
        let convert = |lists: &[Vec<usize>]| -> Result<Vec<VertexSet>> {
            lists
                .iter()
                .map(|l| {
                    VertexSet::try_from_members(n, l.iter().copied())
                        .map_err(|vertex| Error::VertexOutOfRange { vertex, n })
                })
                .collect()
        };
        Ok(Self {
            cliques: convert(cliques)?,
            independents: convert(independents)?,
        })
    }

    pub fn from_file(n: usize, file: &CertificateFile) -> Result<Self> {
        Self::from_lists(n, &file.cliques, &file.independents)
    }

    pub fn to_file(&self) -> CertificateFile {
        CertificateFile {
            cliques: self.cliques.iter().map(VertexSet::to_vec).collect(),
            independents: self.independents.iter().map(VertexSet::to_vec).collect(),
        }
    }

    /// Sorts both families; used to give certificates a canonical form.
    pub fn canonicalize(&mut self) {
        self.cliques.sort();
        self.cliques.dedup();
        self.independents.sort();
        self.independents.dedup();
    }
}

/// Checks every condition of a normal certificate against `g`.
///
/// Members built for a different vertex count are an input error, not a
/// violation.
pub fn verify_certificate(g: &Graph, cert: &NormalCertificate) -> Result<Verification> {
    let n = g.n();
    for s in cert.cliques.iter().chain(&cert.independents) {
        if s.universe() != n {
            return Err(Error::invalid(format!(
                "certificate member built for {} vertices, graph has {n}",
                s.universe()
            )));
        }
    }
    let mut violations = Vec::new();
    for (index, c) in cert.cliques.iter().enumerate() {
        let members = c.to_vec();
        let missing = members.iter().enumerate().find_map(|(i, &u)| {
            members[i + 1..].iter().find(|&&v| !g.has_edge(u, v)).map(|&v| (u, v))
        });
        if let Some(missing_edge) = missing {
            violations.push(Violation::NotClique { index, missing_edge });
        }
    }
    for (index, s) in cert.independents.iter().enumerate() {
        if let Some(edge) = g.edge_within(s) {
            violations.push(Violation::NotIndependent { index, edge });
        }
    }
    let cover = |family: &[VertexSet]| {
        family.iter().fold(VertexSet::new(n), |mut acc, s| {
            acc.union_with(s);
            acc
        })
    };
    for vertex in cover(&cert.cliques).complement().iter() {
        violations.push(Violation::UncoveredByCliques { vertex });
    }
    for vertex in cover(&cert.independents).complement().iter() {
        violations.push(Violation::UncoveredByIndependents { vertex });
    }
    for (clique, c) in cert.cliques.iter().enumerate() {
        for (independent, s) in cert.independents.iter().enumerate() {
            if !c.intersects(s) {
                violations.push(Violation::Disjoint { clique, independent });
            }
        }
    }
    Ok(if violations.is_empty() {
        Verification::Valid
    } else {
        Verification::Invalid(violations)
    })
}
