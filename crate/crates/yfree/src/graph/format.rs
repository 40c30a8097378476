//! graph6, plain edge-list and DOT encodings.

use super::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
}

fn g6_err(offset: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Graph6 { offset, msg: msg.into() }
}

/// Parse a graph6 string (optionally prefixed with the ">>graph6<<" header).
pub fn parse_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let mut base = 0;
    let bytes = if let Some(rest) = s.strip_prefix(">>graph6<<") {
        base = 10;
        rest.as_bytes()
    } else {
        s.as_bytes()
    };
    if bytes.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(g6_err(base + bytes.len(), "truncated 36-bit order"));
            }
            let mut n: u64 = 0;
            for &b in &bytes[2..8] {
                n = n << 6 | (b - 63) as u64;
            }
            (n as usize, 8)
        } else {
            if bytes.len() < 4 {
                return Err(g6_err(base + bytes.len(), "truncated 18-bit order"));
            }
            let mut n: u64 = 0;
            for &b in &bytes[1..4] {
                n = n << 6 | (b - 63) as u64;
            }
            if n <= 62 {
                return Err(g6_err(base + 1, "order <= 62 must use the short form"));
            }
            (n as usize, 4)
        }
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(g6_err(base + bytes.len(), format!("expected {nbytes} edge bytes")));
    }
    if bytes.len() - pos > nbytes {
        return Err(g6_err(base + pos + nbytes, "trailing data"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    while bit < nbits {
        let b = bytes[pos] - 63;
        for k in 0..6 {
            if bit + k >= nbits {
                if b & (1 << (5 - k)) != 0 {
                    return Err(g6_err(base + pos, "nonzero padding bits"));
                }
                continue;
            }
            if b & (1 << (5 - k)) != 0 {
                g.adj[i].push(j as u32);
                g.adj[j].push(i as u32);
                g.m += 1;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        bit += 6;
        pos += 1;
    }
    g.sort_adj();
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).unwrap()
}

fn el_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::EdgeList { line, msg: msg.into() }
}

/// Parse "n m" followed by m lines "u v".
pub fn parse_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (ln, header) = lines.next().ok_or_else(|| el_err(1, "missing header"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(el_err(ln + 1, "header must be \"n m\""));
    }
    let n: usize = parts[0].parse().map_err(|_| el_err(ln + 1, "bad vertex count"))?;
    let m: usize = parts[1].parse().map_err(|_| el_err(ln + 1, "bad edge count"))?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| el_err(s.lines().count(), format!("expected {m} edge lines")))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(el_err(ln + 1, "edge line must be \"u v\""));
        }
        let u: usize = parts[0].parse().map_err(|_| el_err(ln + 1, "bad endpoint"))?;
        let v: usize = parts[1].parse().map_err(|_| el_err(ln + 1, "bad endpoint"))?;
        edges.push((u, v));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(el_err(ln + 1, "trailing data"));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT output: one undirected edge statement per edge, plus node statements
/// for isolated vertices.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
