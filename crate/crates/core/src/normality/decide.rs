//! Exact normality decision by cover search over maximal cliques.
//!
//! Enlarging a member of a certificate never breaks covering and can only
//! enlarge intersections, so it suffices to search subfamilies of the
//! maximal cliques and maximal independent sets. For a fixed clique family
//! the best independent family is every maximal independent set meeting all
//! chosen cliques ("survivors"), and the pair is a certificate iff the
//! cliques and the survivors both cover the vertex set. Adding cliques only
//! shrinks the survivors, which gives the pruning rule.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::certificate::NormalCertificate;
use crate::cliques::{maximal_cliques, maximal_independent_sets};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Search limits. Exhausting either one yields [`Decision::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
        }
    }

    pub const fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.max_time = Some(limit);
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::nodes(5_000_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Normal(NormalCertificate),
    NotNormal,
    BudgetExceeded { nodes: u64 },
}

impl Decision {
    pub fn is_normal(&self) -> bool {
        matches!(self, Decision::Normal(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::Normal(_) => "Normal",
            Decision::NotNormal => "NotNormal",
            Decision::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }
}

struct Exhausted;

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
}

impl Meter {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(Exhausted);
        }
        if let Some(limit) = self.budget.max_time {
            if self.nodes.is_multiple_of(256) && self.start.elapsed() > limit {
                return Err(Exhausted);
            }
        }
        Ok(())
    }
}

/// Decides whether `g` is normal.
///
/// Connected components are decided separately: a disjoint union is normal
/// iff every component is. The search order is fixed, so the returned
/// certificate depends only on the graph.
pub fn decide_normal(g: &Graph, budget: Budget) -> Decision {
    let mut meter = Meter {
        budget,
        start: Instant::now(),
        nodes: 0,
    };
    let n = g.n();
    let mut cliques = Vec::new();
    let mut families: Vec<Vec<VertexSet>> = Vec::new();
    for comp in g.connected_components() {
        let keep = VertexSet::from_members(n, comp.iter().copied());
        let (h, mapping) = g.induced_subgraph(&keep);
        let lift = |s: &VertexSet| VertexSet::from_members(n, s.iter().map(|v| mapping[v]));
        match decide_connected(&h, &mut meter) {
            Err(Exhausted) => return Decision::BudgetExceeded { nodes: meter.nodes },
            Ok(None) => return Decision::NotNormal,
            Ok(Some(cert)) => {
                cliques.extend(cert.cliques.iter().map(lift));
                families.push(cert.independents.iter().map(lift).collect());
            }
        }
    }
    // Independent sets of different components can be merged freely; zip them.
    let width = families.iter().map(Vec::len).max().unwrap_or(0);
    let independents = (0..width)
        .map(|i| {
            families.iter().fold(VertexSet::new(n), |mut acc, fam| {
                acc.union_with(&fam[i % fam.len()]);
                acc
            })
        })
        .collect();
    let mut cert = NormalCertificate { cliques, independents };
    cert.canonicalize();
    Decision::Normal(cert)
}

fn decide_connected(g: &Graph, meter: &mut Meter) -> Result<Option<NormalCertificate>, Exhausted> {
    let n = g.n();
    let cliques = maximal_cliques(g);
    let mis = maximal_independent_sets(g);
    let meets: Vec<VertexSet> = cliques
        .iter()
        .map(|c| VertexSet::from_members(mis.len(), (0..mis.len()).filter(|&i| mis[i].intersects(c))))
        .collect();
    let holders: Vec<VertexSet> = (0..n)
        .map(|v| VertexSet::from_members(mis.len(), (0..mis.len()).filter(|&i| mis[i].contains(v))))
        .collect();
    let mut search = Search {
        n,
        cliques: &cliques,
        meets: &meets,
        holders: &holders,
        excluded: vec![false; cliques.len()],
        chosen: Vec::new(),
        meter,
    };
    let found = search.dfs(&VertexSet::new(n), &VertexSet::full(mis.len()))?;
    Ok(found.map(|survivors| {
        let chosen = search.chosen.iter().map(|&c| cliques[c].clone()).collect();
        let independents = survivors.iter().map(|i| mis[i].clone()).collect();
        minimize(n, chosen, independents)
    }))
}

struct Search<'a, 'm> {
    n: usize,
    cliques: &'a [VertexSet],
    meets: &'a [VertexSet],
    holders: &'a [VertexSet],
    excluded: Vec<bool>,
    chosen: Vec<usize>,
    meter: &'m mut Meter,
}

impl Search<'_, '_> {
    fn survivors_cover(&self, survivors: &VertexSet) -> bool {
        self.holders.iter().all(|h| h.intersects(survivors))
    }

    fn dfs(&mut self, covered: &VertexSet, survivors: &VertexSet) -> Result<Option<VertexSet>, Exhausted> {
        self.meter.tick()?;
        let uncovered = covered.complement();
        if uncovered.is_empty() {
            return Ok(Some(survivors.clone()));
        }
        let admissible: Vec<bool> = (0..self.cliques.len())
            .map(|c| {
                !self.excluded[c]
                    && self.cliques[c].intersects(&uncovered)
                    && self.survivors_cover(&survivors.intersection(&self.meets[c]))
            })
            .collect();
        // Branch on the uncovered vertex with the fewest admissible cliques.
        let mut pick: Option<(usize, usize)> = None;
        for v in uncovered.iter() {
            let count = (0..self.cliques.len())
                .filter(|&c| admissible[c] && self.cliques[c].contains(v))
                .count();
            if pick.is_none_or(|(_, best)| count < best) {
                pick = Some((v, count));
            }
            if count == 0 {
                return Ok(None);
            }
        }
        let (v, _) = pick.expect("uncovered is non-empty");
        let candidates: Vec<usize> = (0..self.cliques.len())
            .filter(|&c| admissible[c] && self.cliques[c].contains(v))
            .collect();
        let mut result = None;
        let mut newly_excluded = Vec::new();
        for &c in &candidates {
            self.chosen.push(c);
            let next = self.dfs(&covered.union(&self.cliques[c]), &survivors.intersection(&self.meets[c]));
            match next {
                Ok(Some(s)) => {
                    result = Some(s);
                    break;
                }
                Ok(None) => {}
                Err(e) => {
                    for &x in &newly_excluded {
                        self.excluded[x] = false;
                    }
                    return Err(e);
                }
            }
            self.chosen.pop();
            // Later siblings assume `c` is not the first chosen clique through `v`.
            self.excluded[c] = true;
            newly_excluded.push(c);
        }
        for &x in &newly_excluded {
            self.excluded[x] = false;
        }
        debug_assert!(self.n == covered.universe());
        Ok(result)
    }
}

/// Drops members whose removal keeps the family covering, considering the
/// smallest members first so that large members are preferentially kept.
fn minimize(n: usize, cliques: Vec<VertexSet>, independents: Vec<VertexSet>) -> NormalCertificate {
    let prune = |mut family: Vec<VertexSet>| {
        family.sort();
        let mut order: Vec<usize> = (0..family.len()).collect();
        order.sort_by(|&a, &b| family[a].len().cmp(&family[b].len()).then(b.cmp(&a)));
        let mut alive = vec![true; family.len()];
        for i in order {
            alive[i] = false;
            let covered = family
                .iter()
                .zip(&alive)
                .filter(|(_, &a)| a)
                .fold(VertexSet::new(n), |mut acc, (s, _)| {
                    acc.union_with(s);
                    acc
                });
            if covered.len() != n {
                alive[i] = true;
            }
        }
        family
            .into_iter()
            .zip(alive)
            .filter_map(|(s, a)| a.then_some(s))
            .collect::<Vec<_>>()
    };
    let mut cert = NormalCertificate {
        cliques: prune(cliques),
        independents: prune(independents),
    };
    cert.canonicalize();
    cert
}
