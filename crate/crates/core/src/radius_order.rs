//! Exhaustive enumeration of small graphs up to isomorphism and the
//! minimum-order search for a prescribed spectral radius.
//!
//! Canonical form: the lexicographically minimal adjacency bit-string,
//! bits ordered column by column (pair `(i, j)` with `i < j` at position
//! `j(j-1)/2 + i`), minimized over all vertex permutations by a
//! branch-and-bound search. With at most 8 vertices a bit-string fits a
//! `u32` and minimality is exact.
//!
//! Enumeration is incremental: the isomorphism classes on `k` vertices
//! are exactly the canonical forms of (class on `k-1` vertices) + (one
//! new vertex attached by an arbitrary neighborhood), because deleting
//! the last vertex of any graph leaves a graph on `k-1` vertices. Each
//! level is deduplicated by canonical key, so every class appears once.

use crate::error::{Error, Result};
use crate::exec::{find_map_first, map_collect, ExecMode};
use crate::graph::{build_graph, Graph};
use crate::spectra::spectral_radius;
use serde::Serialize;

pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Outcome of [`kappa_search`].
#[derive(Debug, Clone, Serialize)]
pub struct KappaResult {
    pub lambda: f64,
    pub verdict: KappaVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub enum KappaVerdict {
    /// No connected graph on fewer vertices matches; `certificate` is the
    /// first matching graph in enumeration order and `residual` its
    /// numerical mismatch `|lambda_1 - lambda|`.
    Found {
        kappa: usize,
        certificate: Graph,
        residual: f64,
    },
    NotFoundUpTo(usize),
}

fn pair_pos(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Minimal adjacency bit-string of `adj` (neighbor masks, one per vertex)
/// over all permutations. Bit `pair_pos(i, j)` of the result counts from
/// the most significant end, so smaller `u32` means lexicographically
/// smaller bit-string.
fn canonical_key(n: usize, adj: &[u8]) -> u32 {
    let nbits = n * (n - 1) / 2;
    if nbits == 0 {
        return 0;
    }
    let mut best = u32::MAX >> (32 - nbits);
    let mut perm = [0usize; 8];
    let mut used = [false; 8];
    search(n, adj, 0, 0, 0, &mut perm, &mut used, &mut best, nbits);
    best
}

#[allow(clippy::too_many_arguments)]
fn search(
    n: usize,
    adj: &[u8],
    q: usize,
    partial: u32,
    bits: usize,
    perm: &mut [usize; 8],
    used: &mut [bool; 8],
    best: &mut u32,
    nbits: usize,
) {
    if q == n {
        if partial < *best {
            *best = partial;
        }
        return;
    }
    // column q appends q bits; candidates sorted by their column value so
    // promising branches are explored first
    let mut cands: Vec<(u32, usize)> = (0..n)
        .filter(|&v| !used[v])
        .map(|v| {
            let mut col = 0u32;
            for i in 0..q {
                col = (col << 1) | ((adj[perm[i]] >> v) & 1) as u32;
            }
            (col, v)
        })
        .collect();
    cands.sort_unstable();
    let new_bits = bits + q;
    for (col, v) in cands {
        let next = (partial << q) | col;
        // compare against the same-length prefix of the incumbent
        if next > *best >> (nbits - new_bits) {
            break; // candidates are sorted, the rest are no better
        }
        perm[q] = v;
        used[v] = true;
        search(n, adj, q + 1, next, new_bits, perm, used, best, nbits);
        used[v] = false;
    }
}

fn key_to_adj(n: usize, key: u32) -> [u8; 8] {
    let nbits = n * (n - 1) / 2;
    let mut adj = [0u8; 8];
    for j in 1..n {
        for i in 0..j {
            if nbits > 0 && (key >> (nbits - 1 - pair_pos(i, j))) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn adj_is_connected(n: usize, adj: &[u8]) -> bool {
    let mut seen: u8 = 1;
    loop {
        let mut next = seen;
        for v in 0..n {
            if seen >> v & 1 == 1 {
                next |= adj[v];
            }
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen.count_ones() as usize == n
}

fn adj_to_graph(n: usize, adj: &[u8]) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if adj[i] >> j & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    build_graph(n, &edges).expect("enumerated adjacency is simple")
}

/// Canonical keys of all isomorphism classes (connected or not) on
/// exactly `n` vertices, ascending.
fn all_class_keys(n: usize, mode: ExecMode) -> Vec<u32> {
    let mut level: Vec<u32> = vec![0]; // the single graph on one vertex
    for k in 2..=n {
        let mut next: Vec<u32> = map_collect(mode, &level, |&key| {
            let parent = key_to_adj(k - 1, key);
            (0u8..1 << (k - 1))
                .map(|mask| {
                    let mut adj = parent;
                    adj[k - 1] = mask;
                    for i in 0..k - 1 {
                        if mask >> i & 1 == 1 {
                            adj[i] |= 1 << (k - 1);
                        }
                    }
                    canonical_key(k, &adj)
                })
                .collect::<Vec<u32>>()
        })
        .into_iter()
        .flatten()
        .collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

/// Every connected simple graph on `n` vertices, one per isomorphism
/// class, in ascending canonical-key order. Each returned graph is its
/// class's canonical representative. Supported for `1 <= n <= 8`.
pub fn enumerate_connected(n: usize, mode: ExecMode) -> Result<Vec<Graph>> {
    if n < 1 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::BadParams(format!(
            "enumeration supports 1..={} vertices, got {}",
            MAX_ENUMERATION_VERTICES, n
        )));
    }
    Ok(all_class_keys(n, mode)
        .into_iter()
        .map(|key| key_to_adj(n, key))
        .filter(|adj| adj_is_connected(n, adj))
        .map(|adj| adj_to_graph(n, &adj))
        .collect())
}

/// Scans orders `n = 1..=n_max` for a connected graph whose spectral
/// radius matches `lambda` within `match_tol`; the first matching order
/// wins and the certificate is the first match in enumeration order. The
/// match is numerical, not algebraic.
pub fn kappa_search(
    lambda: f64,
    n_max: usize,
    match_tol: f64,
    mode: ExecMode,
) -> Result<KappaResult> {
    if !(lambda >= 0.0) {
        return Err(Error::BadParams(format!("target radius must be >= 0, got {}", lambda)));
    }
    if !(match_tol > 0.0) {
        return Err(Error::BadParams("match tolerance must be positive".into()));
    }
    if n_max < 1 || n_max > MAX_ENUMERATION_VERTICES {
        return Err(Error::BadParams(format!(
            "search supports n_max in 1..={}, got {}",
            MAX_ENUMERATION_VERTICES, n_max
        )));
    }
    for n in 1..=n_max {
        let graphs = enumerate_connected(n, mode)?;
        let hit = find_map_first(mode, &graphs, |g| {
            let (r, _) = spectral_radius(g).expect("enumerated graphs are connected");
            let residual = (r - lambda).abs();
            (residual <= match_tol).then(|| (g.clone(), residual))
        });
        if let Some((certificate, residual)) = hit {
            return Ok(KappaResult {
                lambda,
                verdict: KappaVerdict::Found { kappa: n, certificate, residual },
            });
        }
    }
    Ok(KappaResult { lambda, verdict: KappaVerdict::NotFoundUpTo(n_max) })
}

/// [`kappa_search`] over an externally supplied collection of connected
/// graphs (for example a graph6 stream from a third-party generator).
/// All graphs are scanned; the smallest order with a match wins, ties
/// broken by stream position. `NotFoundUpTo` reports the largest order
/// seen. Disconnected entries are rejected.
pub fn kappa_search_stream<I>(lambda: f64, match_tol: f64, graphs: I) -> Result<KappaResult>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    if !(lambda >= 0.0) {
        return Err(Error::BadParams(format!("target radius must be >= 0, got {}", lambda)));
    }
    if !(match_tol > 0.0) {
        return Err(Error::BadParams("match tolerance must be positive".into()));
    }
    let mut best: Option<(usize, Graph, f64)> = None;
    let mut n_seen = 0usize;
    for g in graphs {
        let g = g?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        n_seen = n_seen.max(g.n());
        if best.as_ref().is_some_and(|(k, _, _)| g.n() >= *k) {
            continue;
        }
        let (r, _) = spectral_radius(&g)?;
        let residual = (r - lambda).abs();
        if residual <= match_tol {
            best = Some((g.n(), g, residual));
        }
    }
    Ok(KappaResult {
        lambda,
        verdict: match best {
            Some((kappa, certificate, residual)) => {
                KappaVerdict::Found { kappa, certificate, residual }
            }
            None => KappaVerdict::NotFoundUpTo(n_seen),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use crate::graph::FamilyKind;

    #[test]
    fn connected_class_counts() {
        let want = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &w) in want.iter().enumerate() {
            let got = enumerate_connected(i + 1, ExecMode::Sequential).unwrap().len();
            assert_eq!(got, w, "n = {}", i + 1);
        }
    }

    #[test]
    fn all_class_counts() {
        let want = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(all_class_keys(i + 1, ExecMode::Sequential).len(), w, "n = {}", i + 1);
        }
    }

    #[test]
    fn eight_vertex_counts() {
        let keys = all_class_keys(8, ExecMode::Sequential);
        assert_eq!(keys.len(), 12346);
        let connected = enumerate_connected(8, ExecMode::Sequential).unwrap();
        assert_eq!(connected.len(), 11117);
    }

    #[test]
    fn canonical_key_is_permutation_invariant() {
        let g = family(FamilyKind::Tadpole, &[4, 3]).unwrap();
        let n = g.n();
        let base = {
            let mut adj = [0u8; 8];
            for &(u, v) in g.edges() {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            canonical_key(n, &adj)
        };
        for shift in 1..n {
            let mut adj = [0u8; 8];
            for &(u, v) in g.edges() {
                let (a, b) = ((u + shift) % n, (v + shift) % n);
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            assert_eq!(canonical_key(n, &adj), base, "shift {}", shift);
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_connected(5, ExecMode::Sequential).unwrap();
        let b = enumerate_connected(5, ExecMode::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kappa_known_values() {
        let r = kappa_search(1.0, 5, 1e-9, ExecMode::Sequential).unwrap();
        match r.verdict {
            KappaVerdict::Found { kappa, ref certificate, residual } => {
                assert_eq!(kappa, 2);
                assert_eq!(certificate.edge_count(), 1);
                assert!(residual <= 1e-9);
            }
            _ => panic!("expected a match for radius 1"),
        }
        let r = kappa_search(2.0, 5, 1e-9, ExecMode::Sequential).unwrap();
        match r.verdict {
            KappaVerdict::Found { kappa, ref certificate, .. } => {
                assert_eq!(kappa, 3);
                assert_eq!(certificate.edge_count(), 3); // the triangle
            }
            _ => panic!("expected a match for radius 2"),
        }
        let r = kappa_search(2.0f64.sqrt(), 5, 1e-9, ExecMode::Sequential).unwrap();
        match r.verdict {
            KappaVerdict::Found { kappa, ref certificate, .. } => {
                assert_eq!(kappa, 3);
                assert_eq!(certificate.edge_count(), 2); // the 3-vertex path
            }
            _ => panic!("expected a match for radius sqrt(2)"),
        }
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        let r = kappa_search(golden, 5, 1e-9, ExecMode::Sequential).unwrap();
        match r.verdict {
            KappaVerdict::Found { kappa, ref certificate, .. } => {
                assert_eq!(kappa, 4);
                assert_eq!(certificate.edge_count(), 3); // the 4-vertex path
            }
            _ => panic!("expected a match for the golden ratio"),
        }
    }

    #[test]
    fn kappa_zero_is_the_single_vertex() {
        let r = kappa_search(0.0, 3, 1e-9, ExecMode::Sequential).unwrap();
        match r.verdict {
            KappaVerdict::Found { kappa, .. } => assert_eq!(kappa, 1),
            _ => panic!("expected the one-vertex graph"),
        }
    }

    #[test]
    fn kappa_not_found_for_non_algebraic_radius() {
        let r = kappa_search(1.8, 7, 1e-9, ExecMode::Sequential).unwrap();
        assert!(matches!(r.verdict, KappaVerdict::NotFoundUpTo(7)));
    }

    #[test]
    fn found_results_satisfy_lower_bound_and_reproduce() {
        for lambda in [1.0, 2.0, 2.0f64.sqrt(), (1.0 + 5.0f64.sqrt()) / 2.0] {
            let r = kappa_search(lambda, 6, 1e-9, ExecMode::Sequential).unwrap();
            if let KappaVerdict::Found { kappa, certificate, residual } = r.verdict {
                assert!(kappa as f64 >= lambda + 1.0 - 1e-9);
                let (r1, _) = spectral_radius(&certificate).unwrap();
                assert!((r1 - lambda).abs() <= 1e-9);
                assert!(residual <= 1e-9);
                assert!(certificate.is_connected());
            } else {
                panic!("expected a match for {}", lambda);
            }
        }
    }

    #[test]
    fn stream_search_picks_smallest_order() {
        let graphs = vec![
            Ok(family(FamilyKind::Cycle, &[4]).unwrap()),
            Ok(family(FamilyKind::Cycle, &[3]).unwrap()),
            Ok(family(FamilyKind::Path, &[5]).unwrap()),
        ];
        let r = kappa_search_stream(2.0, 1e-9, graphs).unwrap();
        match r.verdict {
            KappaVerdict::Found { kappa, .. } => assert_eq!(kappa, 3),
            _ => panic!("expected the triangle"),
        }
        let no_match = vec![Ok(family(FamilyKind::Path, &[2]).unwrap())];
        let r = kappa_search_stream(1.75, 1e-9, no_match).unwrap();
        assert!(matches!(r.verdict, KappaVerdict::NotFoundUpTo(2)));
    }

    #[test]
    fn search_rejects_bad_params() {
        assert!(kappa_search(-1.0, 5, 1e-9, ExecMode::Sequential).is_err());
        assert!(kappa_search(1.0, 0, 1e-9, ExecMode::Sequential).is_err());
        assert!(kappa_search(1.0, 9, 1e-9, ExecMode::Sequential).is_err());
        assert!(kappa_search(1.0, 5, 0.0, ExecMode::Sequential).is_err());
        assert!(enumerate_connected(0, ExecMode::Sequential).is_err());
    }
}
