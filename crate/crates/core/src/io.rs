//! Instance file format and the seeded random generator.
//!
//! Files are line oriented: `c` starts a comment, the single header
//! `p hs3 <n> <m> <k>` gives the vertex count, edge-line count, and default
//! budget, and each `e v1 [v2 [v3]]` line lists one edge. Vertex ids run
//! from 1 to n. Duplicate edge lines collapse to one edge.

use crate::hypergraph::{Edge, Hypergraph, Vertex};
use crate::rules::Instance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

// parse guard so a bogus header cannot allocate an absurd vertex set
const MAX_N: usize = 1_000_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn fail<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

/// Parse an instance file into a graph plus its header budget.
pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize, i64, usize)> = None;
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let mut edge_lines = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(first) = tok.next() else { continue };
        match first {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return fail(line, "duplicate header line");
                }
                if tok.next() != Some("hs3") {
                    return fail(line, "header must read `p hs3 <n> <m> <k>`");
                }
                let mut field = |name: &str| -> Result<i64, ParseError> {
                    match tok.next().map(str::parse::<i64>) {
                        Some(Ok(x)) => Ok(x),
                        Some(Err(_)) => fail(line, format!("header field {name} is not an integer")),
                        None => fail(line, format!("header is missing the {name} field")),
                    }
                };
                let n = field("n")?;
                let m = field("m")?;
                let k = field("k")?;
                if tok.next().is_some() {
                    return fail(line, "trailing tokens after header");
                }
                if n < 0 || n as usize > MAX_N {
                    return fail(line, format!("vertex count {n} out of range 0..={MAX_N}"));
                }
                if m < 0 {
                    return fail(line, "edge count must be nonnegative");
                }
                if k < 0 {
                    return fail(line, "budget must be nonnegative");
                }
                header = Some((n as usize, m as usize, k, line));
            }
            "e" => {
                let Some((n, ..)) = header else {
                    return fail(line, "edge line before header");
                };
                let mut vs: Vec<Vertex> = Vec::with_capacity(3);
                for t in tok {
                    let Ok(v) = t.parse::<u64>() else {
                        return fail(line, format!("vertex id {t:?} is not an integer"));
                    };
                    if v < 1 || v > n as u64 {
                        return fail(line, format!("vertex id {v} out of range 1..={n}"));
                    }
                    if vs.contains(&(v as Vertex)) {
                        return fail(line, format!("repeated vertex {v} in edge"));
                    }
                    vs.push(v as Vertex);
                }
                if vs.is_empty() || vs.len() > 3 {
                    return fail(line, "edge must list 1 to 3 vertex ids");
                }
                edges.insert(Edge::new(vs));
                edge_lines += 1;
            }
            other => return fail(line, format!("unrecognized line type {other:?}")),
        }
    }
    let Some((n, m, k, p_line)) = header else {
        return fail(1, "missing `p hs3` header");
    };
    if edge_lines != m {
        return fail(
            p_line,
            format!("header declares {m} edges but the file has {edge_lines} edge lines"),
        );
    }
    let vertices: BTreeSet<Vertex> = (1..=n as Vertex).collect();
    Ok(Instance {
        graph: Hypergraph::new(vertices, edges),
        k,
    })
}

/// Render a graph and budget in the instance file format, edges in
/// canonical order.
pub fn serialize(g: &Hypergraph, k: i64) -> String {
    let n = g.vertices().iter().next_back().copied().unwrap_or(0);
    let mut out = String::new();
    writeln!(out, "p hs3 {} {} {}", n, g.edge_count(), k).unwrap();
    for e in g.edges() {
        out.push('e');
        for v in e.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Random-instance shape: `p2` is the probability a sampled edge has two
/// vertices; otherwise it has three.
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub n: usize,
    pub edge_count: usize,
    pub p2: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("edge count {want} exceeds the {have} distinct edges on {n} vertices")]
    TooManyEdges { want: usize, have: usize, n: usize },
    #[error("size-2 probability must lie in [0, 1]")]
    BadDistribution,
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn choose3(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Sample a graph on vertices 1..=n with `edge_count` distinct edges.
/// Sizes follow `p2` until one size's pool runs dry, then the other size
/// fills the remainder. Deterministic per seed.
pub fn generate(cfg: &GenConfig) -> Result<Hypergraph, GenError> {
    if !(0.0..=1.0).contains(&cfg.p2) {
        return Err(GenError::BadDistribution);
    }
    let n = cfg.n;
    let (cap2, cap3) = (choose2(n), choose3(n));
    if cfg.edge_count > cap2 + cap3 {
        return Err(GenError::TooManyEdges {
            want: cfg.edge_count,
            have: cap2 + cap3,
            n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let (mut have2, mut have3) = (0usize, 0usize);
    while edges.len() < cfg.edge_count {
        let want2 = if have2 == cap2 {
            false
        } else if have3 == cap3 {
            true
        } else {
            rng.gen_bool(cfg.p2)
        };
        let size = if want2 { 2 } else { 3 };
        // rejection sampling; pools are small enough that this stays cheap
        // even when a size must be exhausted completely
        loop {
            let mut vs: Vec<Vertex> = Vec::with_capacity(size);
            while vs.len() < size {
                let v = rng.gen_range(1..=n as Vertex);
                if !vs.contains(&v) {
                    vs.push(v);
                }
            }
            if edges.insert(Edge::new(vs)) {
                if want2 {
                    have2 += 1;
                } else {
                    have3 += 1;
                }
                break;
            }
        }
    }
    let vertices: BTreeSet<Vertex> = (1..=n as Vertex).collect();
    Ok(Hypergraph::new(vertices, edges))
}
