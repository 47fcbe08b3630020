//! Text formats: the standard 6-bit packed adjacency format (one graph per
//! line, printable ASCII 63..126) and a plain edge-list document.
//!
//! The packed format stores the strict upper triangle column by column,
//! pairs (0,1), (0,2), (1,2), (0,3), ..., six bits per character with the
//! most significant bit first and 63 added to land in printable ASCII.
//! Only the single-byte size prefix is supported, so `n <= 62`.

use super::{build_graph, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse { offset, reason: reason.into() }
}

pub fn read_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => read_graph6(text),
        GraphFormat::EdgeList => read_edge_list(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Graph6 => write_graph6(g),
        GraphFormat::EdgeList => Ok(g.to_edge_list_string()),
    }
}

fn read_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r', ' ']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    let size = bytes[0];
    if size == 126 {
        return Err(parse_err(0, "multi-byte sizes (n > 62) are unsupported"));
    }
    if !(63..=125).contains(&size) {
        return Err(parse_err(0, format!("invalid size byte {}", size)));
    }
    let n = (size - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() != 1 + nchars {
        return Err(parse_err(
            bytes.len().min(1 + nchars),
            format!("expected {} data byte(s) for n = {}, got {}", nchars, n, bytes.len() - 1),
        ));
    }
    let mut bits = Vec::with_capacity(nchars * 6);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1 + i, format!("data byte {} outside printable range", b)));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    for (i, &bit) in bits.iter().enumerate().skip(nbits) {
        if bit {
            return Err(parse_err(1 + i / 6, "nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    build_graph(n, &edges)
}

fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::BadParams(format!(
            "single-byte size prefix limits n to 62, got {}",
            n
        )));
    }
    let mut out = vec![63 + n as u8];
    let nbits = n * (n - 1) / 2;
    let mut bits = vec![false; nbits.div_ceil(6) * 6];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            bits[idx] = g.has_edge(i, j);
            idx += 1;
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = (v << 1) | b as u8;
        }
        out.push(63 + v);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// Edge-list document: first line `n m`, then `m` lines `u v` with
/// `0 <= u < v < n`. Malformed numbers and semantic violations are reported
/// with the byte offset of the offending line.
fn read_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0usize;
    let mut lines = Vec::new();
    for line in text.split_inclusive('\n') {
        lines.push((offset, line.trim_end_matches(['\n', '\r'])));
        offset += line.len();
    }
    let mut rows = lines.into_iter().filter(|&(_, l)| !l.trim().is_empty());
    let (head_off, head) = rows.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let mut header = head.split_whitespace();
    let n: usize = header
        .next()
        .ok_or_else(|| parse_err(head_off, "missing vertex count"))?
        .parse()
        .map_err(|_| parse_err(head_off, "vertex count is not an integer"))?;
    let m: usize = header
        .next()
        .ok_or_else(|| parse_err(head_off, "missing edge count"))?
        .parse()
        .map_err(|_| parse_err(head_off, "edge count is not an integer"))?;
    if header.next().is_some() {
        return Err(parse_err(head_off, "header has trailing tokens"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (off, line) = rows
            .next()
            .ok_or_else(|| parse_err(text.len(), format!("expected {} edge lines", m)))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .ok_or_else(|| parse_err(off, "missing endpoint"))?
            .parse()
            .map_err(|_| parse_err(off, "endpoint is not an integer"))?;
        let v: usize = it
            .next()
            .ok_or_else(|| parse_err(off, "missing second endpoint"))?
            .parse()
            .map_err(|_| parse_err(off, "endpoint is not an integer"))?;
        if it.next().is_some() {
            return Err(parse_err(off, "edge line has trailing tokens"));
        }
        if u >= v {
            return Err(parse_err(off, format!("edges must satisfy u < v, got {} {}", u, v)));
        }
        if v >= n {
            return Err(parse_err(off, format!("endpoint {} out of range for n = {}", v, n)));
        }
        edges.push((u, v));
    }
    if let Some((off, _)) = rows.next() {
        return Err(parse_err(off, "trailing content after edge lines"));
    }
    build_graph(n, &edges).map_err(|e| match e {
        Error::DuplicateEdge(u, v) => parse_err(0, format!("duplicate edge {} {}", u, v)),
        other => other,
    })
}
