//! Adjacency spectra and the one-parameter family of spider characteristic
//! polynomials.
//!
//! `P_0(t) = t`, `P_1(t) = t^2 - 3`, `P_l(t) = t P_{l-1}(t) - P_{l-2}(t)`
//! is the characteristic-polynomial recursion attached to uniform
//! three-leg spiders: the largest root of `P_l` equals the spectral radius
//! of the spider with three legs of length `l`. The roots increase
//! strictly with `l` and converge to `3 / sqrt(2)` from below, which makes
//! the largest root of each `P_l` a bisection target bracketed by the
//! previous root.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eigen_descending, residual_inf, SymMatrix};
use serde::Serialize;

/// Supremum of the uniform-spider spectral radii: `3 / sqrt(2)`.
pub fn radius_limit() -> f64 {
    3.0 / f64::sqrt(2.0)
}

/// A maximal run of numerically equal eigenvalues with an orthonormal basis
/// of its eigenspace.
#[derive(Debug, Clone, Serialize)]
pub struct EigenGroup {
    /// Representative value: the mean of the run.
    pub value: f64,
    pub multiplicity: usize,
    pub basis: Vec<Vec<f64>>,
}

/// Full adjacency spectrum, descending, grouped at tolerance `tol`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub values: Vec<f64>,
    pub groups: Vec<EigenGroup>,
    pub tol: f64,
}

impl SpectralSummary {
    /// `k`-th eigenvalue group, `k` counted from 1 downwards.
    pub fn group(&self, k: usize) -> Option<&EigenGroup> {
        if k == 0 {
            return None;
        }
        self.groups.get(k - 1)
    }

    /// Number of eigenvalues (with multiplicity) strictly above group `k`.
    pub fn count_above_group(&self, k: usize) -> usize {
        self.groups.iter().take(k.saturating_sub(1)).map(|g| g.multiplicity).sum()
    }

    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }
}

/// Dense adjacency eigendecomposition with the default grouping tolerance
/// `1e-7 * max(1, lambda_1)`.
pub fn adjacency_eigen(g: &Graph) -> Result<SpectralSummary> {
    let lambda1_scale = 1e-7;
    adjacency_eigen_impl(g, None, lambda1_scale)
}

/// Same as [`adjacency_eigen`] with an explicit absolute grouping tolerance.
pub fn adjacency_eigen_with_tol(g: &Graph, tol: f64) -> Result<SpectralSummary> {
    adjacency_eigen_impl(g, Some(tol), 0.0)
}

fn adjacency_eigen_impl(g: &Graph, tol: Option<f64>, scale: f64) -> Result<SpectralSummary> {
    if g.n() == 0 {
        return Err(Error::BadParams("spectrum of the empty graph".into()));
    }
    let m = SymMatrix::adjacency(g);
    let (values, vectors) = eigen_descending(&m)?;
    let tol = tol.unwrap_or_else(|| scale * values[0].max(1.0));

    // contract checks: residual per pair, orthonormality of the full system
    for (val, vec) in values.iter().zip(&vectors) {
        if residual_inf(&m, *val, vec) > 1e-7 * val.abs().max(1.0) {
            return Err(Error::ConvergenceFailure(0));
        }
    }
    for i in 0..vectors.len() {
        for j in i..vectors.len() {
            let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
            let want = if i == j { 1.0 } else { 0.0 };
            if (dot - want).abs() > 1e-8 {
                return Err(Error::ConvergenceFailure(0));
            }
        }
    }

    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > tol {
            let run = &values[start..i];
            groups.push(EigenGroup {
                value: run.iter().sum::<f64>() / run.len() as f64,
                multiplicity: run.len(),
                basis: vectors[start..i].to_vec(),
            });
            start = i;
        }
    }
    Ok(SpectralSummary { values, groups, tol })
}

/// Evaluates `P_l` at `t` by the three-term recursion.
pub fn spider_charpoly_eval(ell: usize, t: f64) -> f64 {
    let mut prev = t; // P_0
    if ell == 0 {
        return prev;
    }
    let mut cur = t * t - 3.0; // P_1
    for _ in 2..=ell {
        let next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Largest root of `P_ell`, `ell >= 1`, to absolute accuracy `1e-12`.
///
/// The bracket `[r_{ell-1}, 3/sqrt(2) + 0.1]` always contains exactly the
/// largest root: the previous root is strictly below it (the roots
/// interlace) and every root stays below `3/sqrt(2)`.
pub fn spider_radius(ell: usize) -> Result<f64> {
    if ell < 1 {
        return Err(Error::BadParams("leg length must be at least 1".into()));
    }
    Ok(radii_up_to(ell)[ell - 1])
}

// Largest root of P_k given the largest root of P_{k-1} (strictly below it).
// P_k is negative at the previous root and positive at 3/sqrt(2) + 0.1.
fn next_radius(k: usize, prev_root: f64) -> f64 {
    let mut lo = prev_root;
    let mut hi = radius_limit() + 0.1;
    debug_assert!(spider_charpoly_eval(k, lo) < 0.0);
    debug_assert!(spider_charpoly_eval(k, hi) > 0.0);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if spider_charpoly_eval(k, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn radii_up_to(ell: usize) -> Vec<f64> {
    let mut radii = Vec::with_capacity(ell);
    let mut prev = 0.0; // largest root of P_0
    for k in 1..=ell {
        prev = next_radius(k, prev);
        radii.push(prev);
    }
    radii
}

/// Smallest leg length `l` whose uniform spider has spectral radius
/// strictly above `lambda`. Defined for `0 < lambda < 3/sqrt(2) - 1e-12`.
pub fn spider_threshold(lambda: f64) -> Result<usize> {
    if !(lambda > 0.0) || lambda >= radius_limit() - 1e-12 {
        return Err(Error::OutOfDomain(format!(
            "threshold defined for 0 < lambda < 3/sqrt(2) - 1e-12, got {}",
            lambda
        )));
    }
    // Roots are bisected to ~5e-14, so "strictly above" needs a guard: a
    // radius exactly equal to lambda (e.g. the leg-2 radius at lambda = 2)
    // must not count. 5e-13 rejects such ties robustly and is far below
    // the 1e-12 trim at the top of the domain, so the scan still
    // terminates for every admissible lambda: the radii approach
    // 3/sqrt(2) geometrically and clear lambda + 5e-13 long before the
    // iteration cap.
    const MARGIN: f64 = 5e-13;
    let mut prev = 0.0;
    for k in 1..=200usize {
        prev = next_radius(k, prev);
        if prev > lambda + MARGIN {
            return Ok(k);
        }
    }
    Err(Error::OutOfDomain(format!(
        "no leg length below the iteration cap exceeds {}",
        lambda
    )))
}

/// Spectral radius and unit Perron vector of a connected graph.
///
/// Computed from the dense eigendecomposition; the top eigenvector is
/// sign-fixed and clamped so the returned vector is entrywise
/// non-negative (strictly positive whenever the graph is connected with at
/// least one edge).
pub fn spectral_radius(g: &Graph) -> Result<(f64, Vec<f64>)> {
    if g.n() == 0 {
        return Err(Error::BadParams("spectral radius of the empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = SymMatrix::adjacency(g);
    let (values, mut vectors) = eigen_descending(&m)?;
    let mut v = std::mem::take(&mut vectors[0]);
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    for x in &mut v {
        if *x < 0.0 {
            debug_assert!(*x > -1e-8, "Perron entry {} too negative", x);
            *x = 0.0;
        }
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    Ok((values[0], v))
}

/// Eigenvalue interlacing between a symmetric matrix and a principal
/// submatrix: with `n = |parent|`, `m = |sub|`, both descending, checks
/// `parent[k] + eps >= sub[k] >= parent[k + n - m] - eps` for every `k`,
/// with `eps = 1e-9`.
pub fn interlacing_check(parent: &[f64], sub: &[f64]) -> Result<bool> {
    const EPS: f64 = 1e-9;
    let n = parent.len();
    let m = sub.len();
    if m > n {
        return Err(Error::BadParams(format!(
            "submatrix spectrum longer than parent ({} > {})",
            m, n
        )));
    }
    for (name, seq) in [("parent", parent), ("sub", sub)] {
        if seq.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParams(format!("{} spectrum is not descending", name)));
        }
    }
    for k in 0..m {
        if !(parent[k] + EPS >= sub[k] && sub[k] >= parent[k + n - m] - EPS) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, petersen, FamilyKind};

    // Closed-form evaluation of P_l for t > 2, used only to cross-check the
    // recursion: with g(t) = (t + sqrt(t^2 - 4)) / 2 the recursion has the
    // explicit solution  A g^l + B g^{-l}.
    fn growth(t: f64) -> f64 {
        (t + (t * t - 4.0).sqrt()) / 2.0
    }

    fn closed_form(ell: usize, t: f64) -> f64 {
        assert!(t > 2.0 + 1e-6);
        let th = growth(t);
        let p0 = t;
        let p1 = t * t - 3.0;
        let a = (th * p1 - p0) / (th * th - 1.0);
        let b = (p0 - p1 / th) / (1.0 - th.powi(-2));
        a * th.powi(ell as i32) + b * th.powi(-(ell as i32))
    }

    #[test]
    fn charpoly_small_cases() {
        assert_eq!(spider_charpoly_eval(0, 1.5), 1.5);
        assert_eq!(spider_charpoly_eval(1, 2.0), 1.0);
        // P_2(t) = t^3 - 4t
        assert!((spider_charpoly_eval(2, 3.0) - 15.0).abs() < 1e-12);
        // P_3(t) = t^4 - 5 t^2 + 3
        assert!((spider_charpoly_eval(3, 2.0) - (16.0 - 20.0 + 3.0)).abs() < 1e-12);
    }

    #[test]
    fn recursion_matches_closed_form_above_two() {
        for &t in &[2.000002, 2.1, 2.5, 3.0, 5.0] {
            for ell in 0..=15 {
                let rec = spider_charpoly_eval(ell, t);
                let cf = closed_form(ell, t);
                let scale = rec.abs().max(1.0);
                assert!(
                    (rec - cf).abs() <= 1e-9 * scale,
                    "ell={} t={} rec={} cf={}",
                    ell,
                    t,
                    rec,
                    cf
                );
            }
        }
    }

    #[test]
    fn leading_coefficient_is_one() {
        let t = 1e3;
        for ell in 0..=8 {
            let v = spider_charpoly_eval(ell, t) / t.powi(ell as i32 + 1);
            assert!((v - 1.0).abs() < 1e-2, "ell={} v={}", ell, v);
        }
    }

    #[test]
    fn radius_known_values() {
        assert!((spider_radius(1).unwrap() - 3.0_f64.sqrt()).abs() < 1e-11);
        assert!((spider_radius(2).unwrap() - 2.0).abs() < 1e-11);
        let r3 = ((5.0 + 13.0_f64.sqrt()) / 2.0).sqrt();
        assert!((spider_radius(3).unwrap() - r3).abs() < 1e-11);
        let r4 = (3.0 + 2.0_f64.sqrt()).sqrt();
        assert!((spider_radius(4).unwrap() - r4).abs() < 1e-11);
        assert!(spider_radius(0).is_err());
    }

    #[test]
    fn radius_increases_below_limit() {
        let mut prev = 0.0;
        for ell in 1..=40 {
            let r = spider_radius(ell).unwrap();
            assert!(r > prev, "ell={}", ell);
            assert!(r < radius_limit());
            prev = r;
        }
    }

    #[test]
    fn radius_matches_eigensolver_on_small_spiders() {
        for ell in 1..=6 {
            let g = family(FamilyKind::Spider, &[ell, ell, ell]).unwrap();
            let s = adjacency_eigen(&g).unwrap();
            assert!(
                (spider_radius(ell).unwrap() - s.lambda1()).abs() < 1e-8,
                "ell={}",
                ell
            );
        }
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(spider_threshold(1.5).unwrap(), 1);
        assert_eq!(spider_threshold(2.0).unwrap(), 3);
        assert_eq!(spider_threshold(2.1).unwrap(), 4);
        assert!(spider_threshold(radius_limit()).is_err());
        assert!(spider_threshold(2.13).is_err());
        assert!(spider_threshold(0.0).is_err());
        assert!(spider_threshold(-1.0).is_err());
    }

    #[test]
    fn grouping_on_c4() {
        let s = adjacency_eigen(&family(FamilyKind::Cycle, &[4]).unwrap()).unwrap();
        assert_eq!(s.groups.len(), 3);
        assert_eq!(s.group(2).unwrap().multiplicity, 2);
        assert!(s.group(2).unwrap().value.abs() < 1e-10);
        assert_eq!(s.count_above_group(2), 1);
        assert!(s.group(4).is_none());
    }

    #[test]
    fn petersen_groups() {
        let s = adjacency_eigen(&petersen()).unwrap();
        let m: Vec<usize> = s.groups.iter().map(|g| g.multiplicity).collect();
        assert_eq!(m, vec![1, 5, 4]);
        assert_eq!(s.count_above_group(3), 6);
    }

    #[test]
    fn spectral_radius_examples() {
        let (r, v) = spectral_radius(&family(FamilyKind::Cycle, &[6]).unwrap()).unwrap();
        assert!((r - 2.0).abs() < 1e-10);
        assert!(v.iter().all(|&x| x > 0.0));
        let (r, _) = spectral_radius(&family(FamilyKind::Star, &[3]).unwrap()).unwrap();
        assert!((r - 3.0_f64.sqrt()).abs() < 1e-10);
        let (r, _) = spectral_radius(&family(FamilyKind::Spider, &[2, 2, 2]).unwrap()).unwrap();
        assert!((r - 2.0).abs() < 1e-10);
        let two = family(FamilyKind::Complete, &[2]).unwrap().disjoint_copies(2).unwrap();
        assert_eq!(spectral_radius(&two), Err(Error::Disconnected));
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlacing_check(&[2.0, 0.0, 0.0, -2.0], &[1.0, 0.0, -1.0]).unwrap());
        assert!(!interlacing_check(&[1.0, -1.0], &[5.0]).unwrap());
        assert!(interlacing_check(&[1.0, -1.0], &[]).unwrap());
        assert!(interlacing_check(&[1.0], &[0.5, 0.0]).is_err());
        assert!(interlacing_check(&[0.0, 1.0], &[0.5]).is_err());
    }
}
