//! Reading and writing graphs as graph6 strings and plain edge lists.
//!
//! Edge-list files start with a line `n m` followed by `m` lines `u v` with
//! 0-based endpoints. The writer emits edges with `u < v` in lexicographic
//! order; files written that way are reproduced byte-for-byte by a
//! read/write cycle.

use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// `.g6` means graph6, `.el`/`.txt` mean edge list.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "g6" => Some(Format::Graph6),
            "el" | "txt" => Some(Format::EdgeList),
            _ => None,
        }
    }
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g6" | "graph6" => Ok(Format::Graph6),
            "el" | "edgelist" => Ok(Format::EdgeList),
            other => Err(Error::invalid(format!("unknown graph format `{other}`"))),
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode_graph6(s: &str) -> Result<Graph> {
    decode_graph6_line(s, 1)
}

fn decode_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s).trim_end_matches(['\r', '\n']);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(line, format!("byte {b} outside the graph6 range")));
    }
    let six = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(Error::parse(line, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(Error::parse(line, "truncated graph6 size field")),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::parse(
            line,
            format!("expected {} data bytes for n={n}, found {}", bits.div_ceil(6), body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::parse(line, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Reads one graph per non-empty line; an optional `>>graph6<<` header is skipped.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        out.push(decode_graph6_line(trimmed, i + 1)?);
    }
    Ok(out)
}

pub fn write_graph6<W: Write>(mut writer: W, graphs: &[Graph]) -> Result<()> {
    for g in graphs {
        writeln!(writer, "{}", encode_graph6(g))?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut lines = reader.lines().enumerate().filter_map(|(i, l)| match l {
        Ok(l) if l.trim().is_empty() => None,
        other => Some((i + 1, other)),
    });
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let header = header?;
    let (n, m) = parse_pair(&header, line_no)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line_no, line) in lines {
        let line = line?;
        let (u, v) = parse_pair(&line, line_no)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::parse(line_no, format!("vertex {w} out of range for n={n}")));
            }
        }
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            line_no,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::parse(line_no, "expected two integers"))?
            .parse()
            .map_err(|e| Error::parse(line_no, format!("{e}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::parse(line_no, "expected exactly two integers"));
    }
    Ok(pair)
}

pub fn write_edge_list<W: Write>(mut writer: W, g: &Graph) -> Result<()> {
    writeln!(writer, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_graphs(path: &Path, format: Format) -> Result<Vec<Graph>> {
    let reader = std::io::BufReader::new(std::fs::File::open(path)?);
    match format {
        Format::Graph6 => read_graph6(reader),
        Format::EdgeList => Ok(vec![read_edge_list(reader)?]),
    }
}
