//! Interchange formats: graph6, the line-oriented trigraph format, and DOT.

use crate::error::{Error, Result};
use crate::graph::{pair_count, pairs, Graph};
use crate::trigraph::{EdgeColor, Trigraph};

const GRAPH6_MAX: usize = 258047;

/// Encodes a graph as one graph6 line (no trailing newline).
///
/// Header is `63 + n` for `n <= 62`, else `'~'` plus three sextets of `n`.
/// The body packs the upper triangle in column-major pair order, six bits
/// per character, each value offset by 63, zero-padded.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= GRAPH6_MAX {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        return Err(Error::BadParameter(format!(
            "order {n} exceeds the supported graph6 range ({GRAPH6_MAX})"
        )));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for (u, v) in pairs(n) {
        acc = (acc << 1) | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one graph6 line. Rejects bad lengths, characters outside
/// `63..=126`, and nonzero padding bits.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(bad(&format!("byte {b} outside 63..=126")));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated long-form order"));
        }
        if bytes[1] == 126 {
            return Err(bad("orders above 258047 are not supported"));
        }
        let n = ((bytes[1] - 63) as usize) << 12 | ((bytes[2] - 63) as usize) << 6 | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = pair_count(n);
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(bad(&format!(
            "body has {} characters, expected {expect} for order {n}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut edges = Vec::new();
    for (i, (u, v)) in pairs(n).enumerate() {
        let value = body[i / 6] - 63;
        if value >> (5 - i % 6) & 1 == 1 {
            edges.push((u, v));
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[expect - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    for (u, v) in edges {
        g = g.flip_edge(u, v).expect("decoded pair in range");
    }
    Ok(g)
}

/// Encodes a trigraph in the line-oriented text format: `n <order>`, then one
/// `B u v` line per black pair and one `G u v` line per gray pair, `u < v`,
/// each group in ascending lexicographic order. Unlisted pairs are white.
pub fn encode_trigraph(t: &Trigraph) -> String {
    let mut out = format!("n {}\n", t.order());
    for (tag, color) in [("B", EdgeColor::Black), ("G", EdgeColor::Gray)] {
        let mut list = t.pairs_of(color);
        list.sort_unstable();
        for (u, v) in list {
            out.push_str(&format!("{tag} {u} {v}\n"));
        }
    }
    out
}

/// Decodes the trigraph text format. Blank lines and `#` comments are
/// ignored; duplicate pairs, `u >= v`, and out-of-range vertices are errors.
pub fn decode_trigraph(block: &str) -> Result<Trigraph> {
    let mut order: Option<usize> = None;
    let mut black = Vec::new();
    let mut gray = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, raw) in block.lines().enumerate() {
        let line = lineno + 1;
        let err = |msg: String| Error::TrigraphParse { line, msg };
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut tokens = text.split_whitespace();
        let tag = tokens.next().unwrap();
        match tag {
            "n" => {
                if order.is_some() {
                    return Err(err("duplicate order line".into()));
                }
                let v = tokens
                    .next()
                    .ok_or_else(|| err("missing order".into()))?
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad order: {e}")))?;
                order = Some(v);
            }
            "B" | "G" => {
                let n = order.ok_or_else(|| err("pair line before order line".into()))?;
                let mut next_num = || -> Result<usize> {
                    tokens
                        .next()
                        .ok_or_else(|| err("missing vertex".into()))?
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad vertex: {e}")))
                };
                let u = next_num()?;
                let v = next_num()?;
                if u >= v {
                    return Err(err(format!("pair ({u}, {v}) must satisfy u < v")));
                }
                if v >= n {
                    return Err(err(format!("vertex {v} out of range for order {n}")));
                }
                if !seen.insert((u, v)) {
                    return Err(err(format!("duplicate pair ({u}, {v})")));
                }
                if tag == "B" {
                    black.push((u, v));
                } else {
                    gray.push((u, v));
                }
            }
            other => {
                return Err(err(format!("unknown tag '{other}'")));
            }
        }
        if tokens.next().is_some() {
            return Err(Error::TrigraphParse {
                line,
                msg: "trailing tokens".into(),
            });
        }
    }
    let n = order.ok_or(Error::TrigraphParse {
        line: 0,
        msg: "missing order line".into(),
    })?;
    Trigraph::from_pairs(n, &black, &gray)
}

/// DOT export: vertices `0..n-1` and undirected edges.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT export of a trigraph: black edges solid, gray edges dashed, white
/// pairs omitted.
pub fn trigraph_to_dot(t: &Trigraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..t.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in t.pairs_of(EdgeColor::Black) {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    for (u, v) in t.pairs_of(EdgeColor::Gray) {
        out.push_str(&format!("  {u} -- {v} [style=dashed];\n"));
    }
    out.push_str("}\n");
    out
}
