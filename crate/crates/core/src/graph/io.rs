//! graph6 and plain edge-list formats.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn encode_n(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Decodes one graph6 string. `line` is only used for diagnostics.
pub fn from_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(line, "empty graph6 string"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(line, format!("invalid graph6 byte {:#04x} at offset {pos}", bytes[pos])));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err(line, "truncated graph6 size field"));
        }
        let n = (val(bytes[1]) << 12) | (val(bytes[2]) << 6) | val(bytes[3]);
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(parse_err(line, "truncated graph6 size field"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | val(b));
        (n, &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(line, format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len())));
    }
    let bit = |idx: usize| (val(body[idx / 6]) >> (5 - idx % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    if (pairs..expected * 6).any(bit) {
        return Err(parse_err(line, "non-zero graph6 padding bits"));
    }
    Graph::from_edges(n, edges).map_err(|e| parse_err(line, e.to_string()))
}

/// Parses newline-delimited graph6, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_graph6_line(l.trim(), i + 1))
        .collect()
}

/// Parses an edge list: one `u v` pair per line, 0-indexed, whitespace
/// separated. `#` starts a comment. The vertex count is one more than the
/// largest label.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_label: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(i + 1, format!("expected two vertex labels, found {}", fields.len())));
        }
        let mut pair = [0usize; 2];
        for (slot, f) in pair.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| parse_err(i + 1, format!("invalid vertex label {f:?}")))?;
        }
        max_label = Some(max_label.map_or(pair[0].max(pair[1]), |m| m.max(pair[0]).max(pair[1])));
        edges.push((i + 1, pair[0], pair[1]));
    }
    let n = max_label.map_or(0, |m| m + 1);
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in &edges {
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u}-{v}")));
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
