//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{
    all_graphs, all_trees, brute_alpha, certifies, graph_from_mask, has_cycle_at_most, naive_is_normal,
};
use normgraph::cycles::count_short_cycles;
use normgraph::experiments::{
    greedy_partial_cover, jq_suite, layered_growth_experiment, lemma1_suite, outsection_graph, partial_cover_suite,
    sample_bipartite, short_cycle_transversal, transversal_suite, trial_rng, BipartiteGraph, EdgeProbability,
    ExperimentConfig, JqConfig, LayeredConfig, Lemma1Params, Lemma1Part, OutsectionConfig, PartialCover,
    PartialCoverConfig, WindowTolerance,
};
use normgraph::normality::{
    decide_normal, to_star_covering, verify_certificate, Budget, Decision, StarCovering,
};
use normgraph::stars::{propagate_forced_independents, Propagation};
use normgraph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn certified_normal(g: &Graph) -> bool {
    match decide_normal(g, Budget::unlimited()) {
        Decision::Normal(cert) => {
            let file = cert.to_file();
            verify_certificate(g, &cert).unwrap().is_valid() && certifies(g, &file.cliques, &file.independents)
        }
        _ => false,
    }
}

fn golden_verdicts() -> Outcome {
    let start = Instant::now();
    let c7 = Graph::cycle(7);
    let not_normal = [("C5", Graph::cycle(5)), ("C7", c7.clone()), ("co-C7", c7.complement())];
    let normal = [
        ("C9", Graph::cycle(9)),
        ("C11", Graph::cycle(11)),
        ("K4", Graph::complete(4)),
        ("P4", Graph::path(4)),
        ("C6", Graph::cycle(6)),
    ];
    let mut wrong = Vec::new();
    for (name, g) in &not_normal {
        if !matches!(decide_normal(g, Budget::unlimited()), Decision::NotNormal) {
            wrong.push(name.to_string());
        }
    }
    for (name, g) in &normal {
        if !certified_normal(g) {
            wrong.push(name.to_string());
        }
    }
    let mut trees = 0;
    for n in 1..=10 {
        for t in all_trees(n) {
            trees += 1;
            if !certified_normal(&t) {
                wrong.push(format!("tree {:?}", t.edges().collect::<Vec<_>>()));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        wrong.is_empty() && elapsed < Duration::from_secs(60),
        format!("{trees} trees, wrong: {wrong:?}, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn complement_symmetry() -> Outcome {
    let verdict = |g: &Graph| decide_normal(g, Budget::unlimited()).is_normal();
    let mut checked = 0;
    let mut exceptions = 0;
    for n in 0..=6 {
        for g in all_graphs(n) {
            checked += 1;
            exceptions += (verdict(&g) != verdict(&g.complement())) as u32;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=7);
        let g = graph_from_mask(n, rng.gen::<u64>());
        checked += 1;
        exceptions += (verdict(&g) != verdict(&g.complement())) as u32;
    }
    outcome(exceptions == 0, format!("{checked} graphs, {exceptions} exceptions"))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    let mut disagreements = 0;
    let mut non_normal = 0;
    for n in 0..=6 {
        for g in all_graphs(n) {
            checked += 1;
            let oracle = naive_is_normal(&g);
            non_normal += !oracle as u32;
            disagreements += (decide_normal(&g, Budget::unlimited()).is_normal() != oracle) as u32;
        }
    }
    outcome(
        disagreements == 0,
        format!("{checked} labeled graphs, {non_normal} not normal, {disagreements} disagreements"),
    )
}

/// 500 normal triangle-free graphs on at most 14 vertices with coverings.
fn star_corpus() -> (Vec<(Graph, StarCovering)>, u64) {
    let cfg = OutsectionConfig::new(SEED, 3, 14, 0);
    let mut corpus = Vec::new();
    let mut drawn = 0;
    while corpus.len() < 500 {
        let g = outsection_graph(&cfg, drawn);
        drawn += 1;
        if let Decision::Normal(cert) = decide_normal(&g, Budget::unlimited()) {
            let sc = to_star_covering(&g, &cert).expect("valid certificate of a triangle-free graph");
            corpus.push((g, sc));
        }
    }
    (corpus, drawn)
}

/// Star-covering conditions re-derived from the definition.
fn covering_ok(g: &Graph, sc: &StarCovering) -> bool {
    let n = g.n();
    let mut owner = vec![0u32; n];
    let mut edges = Vec::new();
    for s in &sc.stars {
        owner[s.center] += 1;
        for &l in &s.leaves {
            owner[l] += 1;
            if !g.has_edge(s.center, l) {
                return false;
            }
            edges.push(vec![s.center.min(l), s.center.max(l)]);
        }
        if s.leaves.is_empty() {
            edges.push(vec![s.center]);
        }
        if s.leaves.len() == 1 && s.leaves[0] < s.center && sc.centers.contains(s.leaves[0]) {
            return false;
        }
    }
    let file = sc.certificate.to_file();
    let mut cliques = file.cliques.clone();
    cliques.sort();
    edges.sort();
    let centers: Vec<usize> = sc.stars.iter().map(|s| s.center).collect();
    owner.iter().all(|&c| c == 1)
        && cliques == edges
        && centers == sc.centers.to_vec()
        && certifies(g, &file.cliques, &file.independents)
}

fn star_reduction(corpus: &[(Graph, StarCovering)], drawn: u64) -> Outcome {
    let violations = corpus
        .iter()
        .filter(|(g, sc)| !covering_ok(g, sc) || sc.stars.len() > brute_alpha(g))
        .count();
    outcome(
        violations == 0 && corpus.len() == 500,
        format!("{} normal of {drawn} drawn, {violations} violations", corpus.len()),
    )
}

fn forced_independence(corpus: &[(Graph, StarCovering)]) -> Outcome {
    let mut starts = 0;
    let mut conflicts = 0;
    let mut dependent = 0;
    for (g, sc) in corpus {
        for c in sc.centers.iter() {
            starts += 1;
            match propagate_forced_independents(g, sc, c).unwrap() {
                Propagation::Forced { vertices } => {
                    let clash = vertices.iter().any(|&u| vertices.iter().any(|&w| g.has_edge(u, w)));
                    dependent += clash as u32;
                }
                Propagation::Conflict { .. } => conflicts += 1,
            }
        }
    }
    outcome(
        conflicts == 0 && dependent == 0,
        format!("{starts} start centers, {conflicts} conflicts, {dependent} non-independent forced sets"),
    )
}

fn lemma1_config() -> ExperimentConfig {
    ExperimentConfig {
        seed: SEED,
        n: 100_000,
        edge: EdgeProbability::Exponent(0.9),
        trials: 50,
    }
}

fn lemma1_scaled() -> (Outcome, String) {
    let start = Instant::now();
    let cfg = lemma1_config();
    let report = lemma1_suite(&cfg, &Lemma1Params::default(), &Lemma1Part::ALL);
    let elapsed = start.elapsed();
    let freq = |r: &Option<normgraph::experiments::PropertyReport>| r.as_ref().unwrap().frequency();
    let (cycles, alpha, degree) = (freq(&report.cycles), freq(&report.alpha), freq(&report.degree));
    let worst_degree = report.rows.iter().filter_map(|r| r.max_degree).max().unwrap_or(0);
    let pass = elapsed < Duration::from_secs(600) && cycles <= 0.1 && alpha == 0.0 && degree == 0.0;
    let detail = format!(
        "{:.0}s; X_7 > {:.0}: {cycles}; alpha bound >= {:.3e}: {alpha}; max degree > {:.2}: {degree} \
         (largest {worst_degree})",
        elapsed.as_secs_f64(),
        report.thresholds.cycles,
        report.thresholds.alpha,
        report.thresholds.degree,
    );
    (outcome(pass, detail), serde_json::to_string(&report).unwrap())
}

fn partial_cover_config() -> PartialCoverConfig {
    PartialCoverConfig {
        seed: SEED,
        a: 2000,
        b: 2000,
        p: 0.05,
        trials: 200,
        tolerance: WindowTolerance::default(),
        ceiling: 0.01,
    }
}

/// Partial-cover invariants checked without the library's own checker.
fn cover_holds(h: &BipartiteGraph, cover: &PartialCover) -> bool {
    let k = h.edge_count().div_ceil(3 * h.a_len());
    let mut xs: Vec<usize> = cover.pairs.iter().map(|p| p.x).collect();
    let mut ys: Vec<usize> = cover.pairs.iter().flat_map(|p| p.ys.iter().copied()).collect();
    let total = ys.len();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    cover.k == k
        && xs.len() == cover.pairs.len()
        && ys.len() == total
        && cover.pairs.iter().all(|p| {
            p.ys.len() == k && p.ys.iter().all(|&y| h.neighbors(p.x).iter().any(|&w| w as usize == y))
        })
        && 3 * total >= h.b_len()
}

fn partial_cover_scaled() -> (Outcome, String) {
    let cfg = partial_cover_config();
    let report = partial_cover_suite(&cfg).unwrap();
    let mut reverified = 0;
    for t in 0..cfg.trials {
        let h = sample_bipartite(cfg.a, cfg.b, cfg.p, &mut trial_rng(cfg.seed, t));
        if let Some(cover) = greedy_partial_cover(&h, cfg.tolerance).cover() {
            if !cover_holds(&h, cover) {
                return (outcome(false, format!("trial {t} fails re-verification")), String::new());
            }
            reverified += 1;
        }
    }
    let success = 1.0 - report.stalls.frequency();
    let pass = success >= 0.99 && report.verification_failures == 0 && reverified == cfg.trials - report.stalls.bad_events;
    (
        outcome(pass, format!("success rate {success:.3}, {reverified} covers re-verified")),
        serde_json::to_string(&report).unwrap(),
    )
}

fn transversal_config() -> ExperimentConfig {
    ExperimentConfig {
        seed: SEED,
        n: 100_000,
        edge: EdgeProbability::Exponent(0.9),
        trials: 50,
    }
}

fn transversal_scaled() -> (Outcome, String) {
    let cfg = transversal_config();
    let report = transversal_suite(&cfg, 7).unwrap();
    let mut failures = 0;
    for t in 0..cfg.trials {
        let g = cfg.sample(t);
        let cut = short_cycle_transversal(&g, 7);
        let (rest, _) = g.induced_subgraph(&cut.complement());
        if cut.len() as u64 > count_short_cycles(&g, 7) || has_cycle_at_most(&rest, 7) {
            failures += 1;
        }
    }
    let pass = failures == 0 && report.violations.bad_events == 0;
    (
        outcome(
            pass,
            format!("{failures} failures, mean |T| {:.1}", report.mean_transversal),
        ),
        serde_json::to_string(&report).unwrap(),
    )
}

fn jq_and_layered() -> (Outcome, String) {
    let jq = jq_suite(&JqConfig::scaled(SEED, 50_000, 20)).unwrap();
    let layered = layered_growth_experiment(&LayeredConfig::scaled(SEED, 50_000, 20)).unwrap();
    let jq_rate = 1.0 - jq.violations.frequency();
    let mono_rate = 1.0 - layered.non_monotone.frequency();
    let stalls: Vec<usize> = layered.runs.iter().filter_map(|r| r.stall.as_ref().map(|s| s.layer)).collect();
    let detail = format!(
        "JQ satisfied {jq_rate:.2} (block {}, threshold {}); monotone {mono_rate:.2} \
         (block {}, runs by layers reached {:?}, stall layers {:?}, mean largest section {:?})",
        jq.resolved.block_size,
        jq.resolved.threshold,
        layered.block_size,
        layered.layers_reached,
        stalls,
        layered.mean_max_size
    );
    let json = serde_json::to_string(&(&jq, &layered)).unwrap();
    (outcome(jq_rate >= 0.95 && mono_rate >= 0.95, detail), json)
}

fn scaled_reports() -> Vec<String> {
    vec![lemma1_scaled().1, partial_cover_scaled().1, transversal_scaled().1, jq_and_layered().1]
}

/// Reruns criteria 6 to 9 in a pool of a different size than the one that
/// produced `first`.
fn determinism(first: &[String]) -> Outcome {
    let before = rayon::current_num_threads();
    let threads = if before == 1 { 3 } else { 1 };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    let again = pool.install(scaled_reports);
    let mismatches: Vec<usize> = first
        .iter()
        .zip(&again)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, _)| i + 6)
        .collect();
    outcome(
        mismatches.is_empty(),
        format!("threads {before} and {threads}, mismatched criteria: {mismatches:?}"),
    )
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut report = |id: u32, name: &str, o: Outcome| {
        all_pass &= o.pass;
        println!("{} criterion {id:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    };
    report(1, "golden verdicts", golden_verdicts());
    report(2, "complement symmetry", complement_symmetry());
    report(3, "oracle equivalence", oracle_equivalence());
    let (corpus, drawn) = star_corpus();
    report(4, "star covering reduction", star_reduction(&corpus, drawn));
    report(5, "forced independence", forced_independence(&corpus));
    let (o6, j6) = lemma1_scaled();
    report(6, "short cycles, alpha, degree", o6);
    let (o7, j7) = partial_cover_scaled();
    report(7, "partial cover", o7);
    let (o8, j8) = transversal_scaled();
    report(8, "short-cycle transversal", o8);
    let (o9, j9) = jq_and_layered();
    report(9, "JQ and layered growth", o9);
    report(10, "determinism", determinism(&[j6, j7, j8, j9]));
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
