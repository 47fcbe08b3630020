//! Parameterized graph families with deterministic vertex labeling.
//!
//! Labeling conventions, fixed so outputs are reproducible byte for byte:
//! cycle (or endpoint) vertices come first, then the internal vertices of
//! each branch path in parameter order. Path, cycle and complete take a
//! vertex count; star takes a leaf count; the remaining families take path
//! and cycle lengths (edge counts).

use super::{build_graph, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FamilyKind {
    /// Two endpoints joined by three internally disjoint paths of lengths
    /// `(p, q, l)` with `p, q >= 2`, `l >= 1`.
    Theta,
    /// Two cycles of lengths `(p, q)` sharing exactly one vertex; `p, q >= 3`.
    Dumbbell,
    /// Two cycles of lengths `(p, q)` joined by a path of length `l`;
    /// `p, q >= 3`, `l >= 1`.
    Barbell,
    /// Three paths of lengths `(p, q, l)` hanging off a common center;
    /// all lengths `>= 1`.
    Spider,
    /// A cycle of length `p >= 3` with a pendant path of length `q >= 1`.
    Tadpole,
    /// Path on `n >= 1` vertices.
    Path,
    /// Cycle on `n >= 3` vertices.
    Cycle,
    /// Complete graph on `n >= 1` vertices.
    Complete,
    /// Star with `k >= 1` leaves (so `k + 1` vertices, center 0).
    Star,
}

fn arity(kind: FamilyKind) -> usize {
    match kind {
        FamilyKind::Theta | FamilyKind::Barbell | FamilyKind::Spider => 3,
        FamilyKind::Dumbbell | FamilyKind::Tadpole => 2,
        _ => 1,
    }
}

pub fn family(kind: FamilyKind, params: &[usize]) -> Result<Graph> {
    if params.len() != arity(kind) {
        return Err(Error::BadParams(format!(
            "{:?} takes {} parameter(s), got {}",
            kind,
            arity(kind),
            params.len()
        )));
    }
    match kind {
        FamilyKind::Theta => theta(params[0], params[1], params[2]),
        FamilyKind::Dumbbell => dumbbell(params[0], params[1]),
        FamilyKind::Barbell => barbell(params[0], params[1], params[2]),
        FamilyKind::Spider => spider(params[0], params[1], params[2]),
        FamilyKind::Tadpole => tadpole(params[0], params[1]),
        FamilyKind::Path => path(params[0]),
        FamilyKind::Cycle => cycle(params[0]),
        FamilyKind::Complete => complete(params[0]),
        FamilyKind::Star => star(params[0]),
    }
}

/// Appends the edges of a path of length `len` from `from` to `to`, using
/// `next_label..` for the `len - 1` internal vertices. Returns the label
/// after the last internal vertex.
fn path_between(
    edges: &mut Vec<(usize, usize)>,
    from: usize,
    to: usize,
    len: usize,
    next_label: usize,
) -> usize {
    if len == 1 {
        edges.push((from, to));
        return next_label;
    }
    let mut prev = from;
    for i in 0..len - 1 {
        edges.push((prev, next_label + i));
        prev = next_label + i;
    }
    edges.push((prev, to));
    next_label + len - 1
}

fn ring(edges: &mut Vec<(usize, usize)>, labels: &[usize]) {
    for i in 0..labels.len() {
        edges.push((labels[i], labels[(i + 1) % labels.len()]));
    }
}

fn theta(p: usize, q: usize, l: usize) -> Result<Graph> {
    if p < 2 || q < 2 || l < 1 {
        return Err(Error::BadParams(format!(
            "theta needs p, q >= 2 and l >= 1, got ({}, {}, {})",
            p, q, l
        )));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    next = path_between(&mut edges, 0, 1, p, next);
    next = path_between(&mut edges, 0, 1, q, next);
    path_between(&mut edges, 0, 1, l, next);
    build_graph(p + q + l - 1, &edges)
}

fn dumbbell(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 {
        return Err(Error::BadParams(format!(
            "dumbbell needs p, q >= 3, got ({}, {})",
            p, q
        )));
    }
    let mut edges = Vec::new();
    let a: Vec<usize> = (0..p).collect();
    ring(&mut edges, &a);
    let mut b = vec![0];
    b.extend(p..p + q - 1);
    ring(&mut edges, &b);
    build_graph(p + q - 1, &edges)
}

fn barbell(p: usize, q: usize, l: usize) -> Result<Graph> {
    if p < 3 || q < 3 || l < 1 {
        return Err(Error::BadParams(format!(
            "barbell needs p, q >= 3 and l >= 1, got ({}, {}, {})",
            p, q, l
        )));
    }
    let mut edges = Vec::new();
    let a: Vec<usize> = (0..p).collect();
    ring(&mut edges, &a);
    let anchor = p + l - 1;
    path_between(&mut edges, 0, anchor, l, p);
    let b: Vec<usize> = (anchor..anchor + q).collect();
    ring(&mut edges, &b);
    build_graph(p + q + l - 1, &edges)
}

fn spider(p: usize, q: usize, l: usize) -> Result<Graph> {
    if p < 1 || q < 1 || l < 1 {
        return Err(Error::BadParams(format!(
            "spider needs all leg lengths >= 1, got ({}, {}, {})",
            p, q, l
        )));
    }
    let mut edges = Vec::new();
    for (start, len) in [(1, p), (1 + p, q), (1 + p + q, l)] {
        let mut prev = 0;
        for v in start..start + len {
            edges.push((prev, v));
            prev = v;
        }
    }
    build_graph(1 + p + q + l, &edges)
}

fn tadpole(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 1 {
        return Err(Error::BadParams(format!(
            "tadpole needs p >= 3 and q >= 1, got ({}, {})",
            p, q
        )));
    }
    let mut edges = Vec::new();
    let a: Vec<usize> = (0..p).collect();
    ring(&mut edges, &a);
    let mut prev = 0;
    for v in p..p + q {
        edges.push((prev, v));
        prev = v;
    }
    build_graph(p + q, &edges)
}

fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParams("path needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    build_graph(n, &edges)
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle needs n >= 3, got {}", n)));
    }
    let labels: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    ring(&mut edges, &labels);
    build_graph(n, &edges)
}

fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParams("complete needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build_graph(n, &edges)
}

fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::BadParams("star needs k >= 1 leaves".into()));
    }
    let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
    build_graph(k + 1, &edges)
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes
/// `i -- i+5`. Fixed test corpus member.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build_graph(10, &edges).expect("fixed edge list")
}
