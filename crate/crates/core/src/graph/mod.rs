//! Undirected simple graphs with a canonical edge representation, plus the
//! structural operations the rest of the crate builds on: balls, induced
//! subgraphs, components, deterministic BFS trees, pendant-path detection,
//! and edge subdivision.

mod family;
mod io;
mod random;

pub use family::{family, petersen, FamilyKind};
pub use io::{read_graph, write_graph, GraphFormat};
pub use random::{random_connected_graph, random_graph};

use crate::error::{Error, Result};
use serde::Serialize;

/// Undirected simple graph on vertices `0..n`. Edges are stored sorted with
/// `u < v`, so equal graphs compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Structural summary: max degree, cyclomatic number, girth and diameter.
/// `girth` is `None` for forests; `diameter` is `None` for disconnected
/// graphs (and graphs with no vertices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureStats {
    pub max_degree: usize,
    pub cyclomatic: usize,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
}

/// Rooted spanning tree produced by BFS. `parent[root] == root`; every other
/// vertex points to its BFS parent, and `depth` records distance to the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningTree {
    pub root: usize,
    pub parent: Vec<usize>,
    pub depth: Vec<usize>,
}

impl SpanningTree {
    /// Tree edges as canonical `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .parent
            .iter()
            .enumerate()
            .filter(|&(v, &p)| v != p)
            .map(|(v, &p)| (p.min(v), p.max(v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Vertices sorted by `(depth, label)`; the scan order used by the
    /// elimination and construction passes in the nodal module.
    pub fn level_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.parent.len()).collect();
        order.sort_unstable_by_key(|&v| (self.depth[v], v));
        order
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }
}

/// Validates and builds a graph from an edge list. Edges may arrive in any
/// order and orientation; they are normalized to `u < v` and sorted.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        if a >= n {
            return Err(Error::OutOfRange(a, n));
        }
        if b >= n {
            return Err(Error::OutOfRange(b, n));
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        canon.push((a.min(b), a.max(b)));
    }
    canon.sort_unstable();
    for w in canon.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
    }
    Ok(Graph { n, edges: canon })
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Connected components as sorted vertex lists, ordered by smallest label.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Max degree, cyclomatic number `|E| - |V| + c`, girth, diameter.
    pub fn structure_stats(&self) -> StructureStats {
        let degrees = self.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let c = self.components().len();
        let cyclomatic = self.edge_count() + c - self.n;
        StructureStats {
            max_degree,
            cyclomatic,
            girth: self.girth(),
            diameter: self.diameter(),
        }
    }

    /// Length of a shortest cycle, or `None` for forests. BFS from every
    /// vertex; the minimum over all roots of `depth(u) + depth(w) + 1` across
    /// non-tree edges is exact.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Vertex set of one shortest cycle, sorted ascending, or `None` for
    /// forests. Deterministic: roots are scanned ascending and within each
    /// BFS non-tree edges in discovery order; the first cycle of minimal
    /// length wins. Only closed walks whose two root paths share nothing
    /// but the root are candidates, which is exact because a BFS from any
    /// vertex on a shortest cycle produces such a walk at girth length.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        let mut best: Option<Vec<usize>> = None;
        let mut best_len = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if len >= best_len {
                            continue;
                        }
                        let mut verts = Vec::with_capacity(len);
                        let mut x = u;
                        while x != root {
                            verts.push(x);
                            x = parent[x];
                        }
                        let mut x = w;
                        while x != root {
                            verts.push(x);
                            x = parent[x];
                        }
                        verts.push(root);
                        verts.sort_unstable();
                        let simple =
                            verts.len() == len && verts.windows(2).all(|p| p[0] != p[1]);
                        if simple {
                            best_len = len;
                            best = Some(verts);
                        }
                    }
                }
            }
        }
        best
    }

    /// Longest shortest path, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let adj = self.adjacency();
        let mut diam = 0usize;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in &dist {
                if d == usize::MAX {
                    return None;
                }
                diam = diam.max(d);
            }
        }
        Some(diam)
    }

    /// Closed ball: every vertex within distance `radius` of `seeds`.
    /// Returned sorted ascending.
    pub fn ball(&self, seeds: &[usize], radius: usize) -> Result<Vec<usize>> {
        for &s in seeds {
            if s >= self.n {
                return Err(Error::OutOfRange(s, self.n));
            }
        }
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in seeds {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            if dist[u] == radius {
                continue;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok((0..self.n).filter(|&v| dist[v] != usize::MAX).collect())
    }

    /// Subgraph induced by `keep` (deduplicated), relabeled to `0..k` in
    /// ascending original order. Second component maps new label -> old.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            if v >= self.n {
                return Err(Error::OutOfRange(v, self.n));
            }
        }
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|&(u, v)| (new_label[u], new_label[v]))
            .collect();
        Ok((build_graph(kept.len(), &edges)?, kept))
    }

    /// BFS spanning tree rooted at `root`, exploring neighbors in ascending
    /// label order. Errors if the graph is disconnected.
    pub fn bfs_tree(&self, root: usize) -> Result<SpanningTree> {
        if root >= self.n {
            return Err(Error::OutOfRange(root, self.n));
        }
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        parent[root] = root;
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut visited = 1usize;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    visited += 1;
                    queue.push_back(w);
                }
            }
        }
        if visited != self.n {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTree { root, parent, depth })
    }

    /// Edges lying on maximal pendant paths: walks inward from each degree-1
    /// vertex while the interior vertices have degree 2.
    pub fn end_path_edges(&self) -> Vec<(usize, usize)> {
        let degrees = self.degrees();
        let adj = self.adjacency();
        let mut marked = std::collections::BTreeSet::new();
        for leaf in 0..self.n {
            if degrees[leaf] != 1 {
                continue;
            }
            let mut prev = leaf;
            let mut cur = adj[leaf][0];
            marked.insert((prev.min(cur), prev.max(cur)));
            while degrees[cur] == 2 {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                marked.insert((cur.min(next), cur.max(next)));
                prev = cur;
                cur = next;
            }
        }
        marked.into_iter().collect()
    }

    /// Replaces edge `e` by a path of length 2 through a fresh vertex `n`.
    pub fn subdivide_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let canon = (e.0.min(e.1), e.0.max(e.1));
        if !self.has_edge(canon.0, canon.1) {
            return Err(Error::NoSuchEdge(canon.0, canon.1));
        }
        let mid = self.n;
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|&x| x != canon).collect();
        edges.push((canon.0, mid));
        edges.push((canon.1, mid));
        build_graph(self.n + 1, &edges)
    }

    /// `copies` disjoint copies of `self`, copy `i` occupying labels
    /// `i*n .. (i+1)*n`.
    pub fn disjoint_copies(&self, copies: usize) -> Result<Graph> {
        if copies == 0 {
            return Err(Error::BadParams("need at least one copy".into()));
        }
        let mut edges = Vec::with_capacity(self.edges.len() * copies);
        for c in 0..copies {
            let off = c * self.n;
            for &(u, v) in &self.edges {
                edges.push((u + off, v + off));
            }
        }
        build_graph(self.n * copies, &edges)
    }

    /// Graph as an edge-list document (`n m` header plus one `u v` line per
    /// edge); the exchange format embedded in reports.
    pub fn to_edge_list_string(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }
}
