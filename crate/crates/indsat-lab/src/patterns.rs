//! Named target patterns: the small graphs whose induced copies the
//! verifiers and searches look for.

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pattern {
    /// Triangle with a pendant vertex.
    Paw,
    /// The star `K_{1,3}`.
    Claw,
    /// `K_{1,t}`.
    Star(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `k` disjoint edges.
    Matching(usize),
    /// Even cycle of the given length with a pendant vertex attached.
    CyclePendant(usize),
    /// Even cycle of the given length with a chord between two vertices at
    /// distance two.
    CycleHop(usize),
}

impl Pattern {
    /// Parses names like `paw`, `claw`, `C5`, `P4`, `K6`, `K1,3,3`, `star4`,
    /// `2K2`, `C6p` (pendant), `C6h` (hop). Case-insensitive.
    pub fn parse(s: &str) -> Result<Pattern> {
        let raw = s.trim();
        let t = raw.to_ascii_lowercase();
        let bad = || Error::BadParameter(format!("unknown pattern: '{raw}'"));
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match t.as_str() {
            "paw" => return Ok(Pattern::Paw),
            "claw" => return Ok(Pattern::Claw),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("star") {
            return Ok(Pattern::Star(num(rest)?));
        }
        if let Some(rest) = t.strip_suffix("k2") {
            if !rest.is_empty() {
                return Ok(Pattern::Matching(num(rest)?));
            }
        }
        if let Some(rest) = t.strip_prefix('p') {
            return Ok(Pattern::Path(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('c') {
            if let Some(len) = rest.strip_suffix('p') {
                return Ok(Pattern::CyclePendant(num(len)?));
            }
            if let Some(len) = rest.strip_suffix('h') {
                return Ok(Pattern::CycleHop(num(len)?));
            }
            return Ok(Pattern::Cycle(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('k') {
            if rest.contains(',') {
                let parts: Result<Vec<usize>> = rest.split(',').map(num).collect();
                return Ok(Pattern::CompleteMultipartite(parts?));
            }
            return Ok(Pattern::Complete(num(rest)?));
        }
        Err(bad())
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pattern::Paw => write!(f, "paw"),
            Pattern::Claw => write!(f, "claw"),
            Pattern::Star(t) => write!(f, "K1,{t}"),
            Pattern::Path(n) => write!(f, "P{n}"),
            Pattern::Cycle(n) => write!(f, "C{n}"),
            Pattern::Complete(n) => write!(f, "K{n}"),
            Pattern::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K{}", s.join(","))
            }
            Pattern::Matching(k) => write!(f, "{k}K2"),
            Pattern::CyclePendant(n) => write!(f, "C{n}p"),
            Pattern::CycleHop(n) => write!(f, "C{n}h"),
        }
    }
}

/// The canonical labeled graph of a pattern.
pub fn pattern(p: &Pattern) -> Result<Graph> {
    let bad = |msg: &str| Error::BadParameter(format!("{p}: {msg}"));
    match p {
        Pattern::Paw => Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
        Pattern::Claw => pattern(&Pattern::Star(3)),
        Pattern::Star(t) => {
            if *t == 0 {
                return Err(bad("needs at least one leaf"));
            }
            let edges: Vec<(usize, usize)> = (1..=*t).map(|v| (0, v)).collect();
            Graph::from_edges(t + 1, &edges)
        }
        Pattern::Path(n) => {
            if *n == 0 {
                return Err(bad("needs at least one vertex"));
            }
            let edges: Vec<(usize, usize)> = (1..*n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(*n, &edges)
        }
        Pattern::Cycle(n) => {
            if *n < 3 {
                return Err(bad("cycles need at least three vertices"));
            }
            let edges: Vec<(usize, usize)> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        Pattern::Complete(n) => {
            if *n == 0 {
                return Err(bad("needs at least one vertex"));
            }
            Ok(Graph::empty(*n).complement())
        }
        Pattern::CompleteMultipartite(parts) => complete_multipartite(parts),
        Pattern::Matching(k) => {
            if *k == 0 {
                return Err(bad("needs at least one edge"));
            }
            let edges: Vec<(usize, usize)> = (0..*k).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(2 * k, &edges)
        }
        Pattern::CyclePendant(len) => {
            if *len < 6 || len % 2 != 0 {
                return Err(bad("takes an even cycle length of at least six"));
            }
            let mut edges: Vec<(usize, usize)> = (0..*len).map(|v| (v, (v + 1) % len)).collect();
            edges.push((0, *len));
            Graph::from_edges(len + 1, &edges)
        }
        Pattern::CycleHop(len) => {
            if *len < 6 || len % 2 != 0 {
                return Err(bad("takes an even cycle length of at least six"));
            }
            let mut edges: Vec<(usize, usize)> = (0..*len).map(|v| (v, (v + 1) % len)).collect();
            edges.push((0, 2));
            Graph::from_edges(*len, &edges)
        }
    }
}

/// `K_{a_1, ..., a_k}`: parts laid out consecutively, all cross edges.
/// Built as the complement of disjoint cliques.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::BadParameter(
            "multipartite parts must be non-empty and positive".into(),
        ));
    }
    let blocks: Vec<Graph> = parts.iter().map(|&p| Graph::empty(p).complement()).collect();
    Ok(disjoint_union(&blocks).complement())
}
