use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use normgraph::experiments::{EdgeProbability, ExperimentConfig};
use normgraph::io::{write_edge_list, write_graph6, Format};
use normgraph::normality::{
    decide_normal, to_star_covering, verify_certificate, CertificateFile, Decision, NormalCertificate,
};
use normgraph::Graph;
use serde::Serialize;

use crate::output::{
    budget, emit, format_name, header, load_graph, write_json, CliError, CliResult, EXIT_BUDGET, EXIT_NEGATIVE,
    EXIT_OK,
};
use crate::{BudgetArgs, GraphInput, SampleArgs};

#[derive(Serialize)]
struct GraphHeader<'a> {
    graph: &'a Path,
    format: &'static str,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    cert: Option<&'a Path>,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget_nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget_ms: Option<u64>,
}

impl<'a> GraphHeader<'a> {
    fn new(input: &'a GraphInput, g: &Graph, format: Format) -> Self {
        Self {
            graph: &input.graph,
            format: format_name(format),
            n: g.n(),
            m: g.edge_count(),
            cert: None,
            budget_nodes: None,
            budget_ms: None,
        }
    }

    fn with_budget(mut self, b: &BudgetArgs) -> Self {
        self.budget_nodes = Some(b.budget_nodes);
        self.budget_ms = b.budget_ms;
        self
    }
}

#[derive(Serialize)]
#[serde(tag = "verdict")]
enum Verdict {
    Normal { certificate: CertificateFile },
    NotNormal,
    BudgetExceeded { nodes: u64 },
}

fn verdict_of(decision: Decision) -> (Verdict, u8) {
    match decision {
        Decision::Normal(cert) => (
            Verdict::Normal {
                certificate: cert.to_file(),
            },
            EXIT_OK,
        ),
        Decision::NotNormal => (Verdict::NotNormal, EXIT_NEGATIVE),
        Decision::BudgetExceeded { nodes } => (Verdict::BudgetExceeded { nodes }, EXIT_BUDGET),
    }
}

pub fn check(input: &GraphInput, b: &BudgetArgs, cert_out: Option<&Path>, out: Option<&Path>) -> CliResult {
    let (g, format) = load_graph(input)?;
    header("check", &GraphHeader::new(input, &g, format).with_budget(b))?;
    let (verdict, code) = verdict_of(decide_normal(&g, budget(b)));
    match &verdict {
        Verdict::Normal { certificate } => {
            eprintln!(
                "Normal: {} cliques, {} independent sets",
                certificate.cliques.len(),
                certificate.independents.len()
            );
            if let Some(path) = cert_out {
                write_json(certificate, path)?;
            }
        }
        Verdict::NotNormal => eprintln!("NotNormal"),
        Verdict::BudgetExceeded { nodes } => eprintln!("BudgetExceeded after {nodes} search nodes"),
    }
    emit(&verdict, out)?;
    Ok(code)
}

fn read_certificate(path: &Path, n: usize) -> CliResult<NormalCertificate> {
    let file: CertificateFile = serde_json::from_reader(BufReader::new(File::open(path)?))
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    Ok(NormalCertificate::from_file(n, &file)?)
}

pub fn verify(input: &GraphInput, cert_path: &Path, out: Option<&Path>) -> CliResult {
    let (g, format) = load_graph(input)?;
    let mut h = GraphHeader::new(input, &g, format);
    h.cert = Some(cert_path);
    header("verify", &h)?;
    let cert = read_certificate(cert_path, g.n())?;
    let verification = verify_certificate(&g, &cert)?;
    let code = if verification.is_valid() {
        eprintln!("Valid");
        EXIT_OK
    } else {
        eprintln!("Invalid");
        EXIT_NEGATIVE
    };
    emit(&verification, out)?;
    Ok(code)
}

pub fn star(input: &GraphInput, cert_path: Option<&Path>, b: &BudgetArgs, out: Option<&Path>) -> CliResult {
    let (g, format) = load_graph(input)?;
    let mut h = GraphHeader::new(input, &g, format);
    h.cert = cert_path;
    if cert_path.is_none() {
        h = h.with_budget(b);
    }
    header("star", &h)?;
    if !g.is_triangle_free() {
        return Err(CliError::usage("star coverings need a triangle-free graph"));
    }
    let cert = match cert_path {
        Some(path) => read_certificate(path, g.n())?,
        None => match decide_normal(&g, budget(b)) {
            Decision::Normal(cert) => cert,
            other => {
                let (verdict, code) = verdict_of(other);
                eprintln!("no certificate: the graph is not known to be normal");
                emit(&verdict, out)?;
                return Ok(code);
            }
        },
    };
    let covering = to_star_covering(&g, &cert)?;
    eprintln!("{} stars", covering.stars.len());
    emit(&covering.to_json(), out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SampleHeader<'a> {
    config: &'a ExperimentConfig,
    trial: u64,
    p: f64,
    format: &'a str,
}

pub fn sample(a: &SampleArgs) -> CliResult {
    let edge = match (a.p, a.exponent) {
        (Some(p), _) => EdgeProbability::P(p),
        (None, Some(e)) => EdgeProbability::Exponent(e),
        (None, None) => return Err(CliError::usage("pass --p or --exponent")),
    };
    let cfg = ExperimentConfig {
        seed: a.seed,
        n: a.n,
        edge,
        trials: a.trial + 1,
    };
    cfg.validate()?;
    header(
        "sample",
        &SampleHeader {
            config: &cfg,
            trial: a.trial,
            p: cfg.p(),
            format: &a.format,
        },
    )?;
    let g = cfg.sample(a.trial);
    eprintln!("{} vertices, {} edges", g.n(), g.edge_count());
    let format: Format = a.format.parse()?;
    let mut w: Box<dyn Write> = match &a.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Graph6 => write_graph6(&mut w, std::slice::from_ref(&g))?,
        Format::EdgeList => write_edge_list(&mut w, &g)?,
    }
    w.flush()?;
    Ok(EXIT_OK)
}
