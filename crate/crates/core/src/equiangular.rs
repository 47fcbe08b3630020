//! Graphs as certificates for systems of equiangular lines.
//!
//! A set of unit vectors whose pairwise inner products are all `+alpha`
//! or `-alpha` describes lines through the origin with a common angle.
//! Encoding the sign pattern as a graph (edge = negative product) turns
//! realizability in dimension `d` into a matrix condition: with
//! `lambda = (1 - alpha) / (2 alpha)`, the matrix `lambda I - A + J/2`
//! must be positive semidefinite of rank at most `d`. This module builds
//! that certificate matrix, checks it, factors it back into explicit
//! unit vectors, and assembles large line systems from disjoint copies
//! of a seed graph whose spectral radius equals `lambda`.

use crate::certify::multiplicity_bound;
use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::linalg::{eigen_descending, SymMatrix};
use crate::spectra::spectral_radius;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Shared relative tolerance for the PSD verdict and the rank cutoff,
/// so the two never disagree about an eigenvalue near zero.
pub const RANK_TOL: f64 = 1e-8;

const NORM_TOL: f64 = 1e-8;
const ANGLE_TOL: f64 = 1e-7;

/// `lambda = (1 - alpha) / (2 alpha)` for `alpha` in (0, 1).
pub fn lambda_of_alpha(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::OutOfDomain(format!(
            "angle parameter must lie in (0, 1), got {}",
            alpha
        )));
    }
    Ok((1.0 - alpha) / (2.0 * alpha))
}

/// Inverse of [`lambda_of_alpha`]: `alpha = 1 / (2 lambda + 1)` for
/// positive `lambda`.
pub fn alpha_of_lambda(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::OutOfDomain(format!(
            "lambda must be positive, got {}",
            lambda
        )));
    }
    Ok(1.0 / (2.0 * lambda + 1.0))
}

/// The certificate matrix `lambda I - A + J/2`. Symmetric by
/// construction.
pub fn gram_matrix(g: &Graph, lambda: f64) -> SymMatrix {
    let n = g.n();
    let mut m = SymMatrix::zero(n);
    for i in 0..n {
        m.set(i, i, lambda + 0.5);
        for j in i + 1..n {
            m.set(i, j, if g.has_edge(i, j) { -0.5 } else { 0.5 });
        }
    }
    m
}

/// Eigenvalue-based PSD and rank verdict: `(psd, rank, min_eigenvalue)`
/// with both cutoffs at `tol * max(1, |largest eigenvalue|)`.
pub fn psd_rank(m: &SymMatrix, tol: f64) -> Result<(bool, usize, f64)> {
    if !(tol > 0.0) {
        return Err(Error::BadParams(format!("tolerance must be positive, got {}", tol)));
    }
    let (values, _) = eigen_descending(m)?;
    let Some(&top) = values.first() else {
        return Ok((true, 0, 0.0));
    };
    let cut = tol * top.abs().max(1.0);
    let min_eig = *values.last().expect("nonempty");
    let rank = values.iter().filter(|&&v| v > cut).count();
    Ok((min_eig >= -cut, rank, min_eig))
}

/// Outcome of testing whether a graph certifies a line system in a
/// target dimension. `accepted` requires the certificate matrix to be
/// PSD with rank at most `dim` and the maximum degree to stay below the
/// angle-dependent cap `6 / alpha^4`.
#[derive(Debug, Clone)]
pub struct EquiangularCertificate {
    pub graph: Graph,
    pub alpha: f64,
    pub lambda: f64,
    pub dim: usize,
    pub psd: bool,
    pub rank: usize,
    pub min_eigenvalue: f64,
    pub degree_ok: bool,
    pub accepted: bool,
}

pub fn certificate_check(g: &Graph, alpha: f64, d: usize) -> Result<EquiangularCertificate> {
    if d < 1 {
        return Err(Error::BadParams("target dimension must be at least 1".into()));
    }
    let lambda = lambda_of_alpha(alpha)?;
    let (psd, rank, min_eigenvalue) = psd_rank(&gram_matrix(g, lambda), RANK_TOL)?;
    let max_degree = g.degrees().into_iter().max().unwrap_or(0);
    let degree_ok = (max_degree as f64) <= (6.0 / alpha.powi(4)).floor();
    Ok(EquiangularCertificate {
        graph: g.clone(),
        alpha,
        lambda,
        dim: d,
        psd,
        rank,
        min_eigenvalue,
        degree_ok,
        accepted: psd && rank <= d && degree_ok,
    })
}

/// Explicit unit vectors realizing a common pairwise angle; one vector
/// per line, each of length `dim`. The residual fields record how far
/// the system is from exact unit norms and the exact angle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineSystem {
    pub alpha: f64,
    pub dim: usize,
    pub vectors: Vec<Vec<f64>>,
    pub max_norm_residual: f64,
    pub max_angle_residual: f64,
}

fn residuals(alpha: f64, vectors: &[Vec<f64>]) -> (f64, f64) {
    let mut norm_r = 0.0f64;
    let mut angle_r = 0.0f64;
    for (i, v) in vectors.iter().enumerate() {
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        norm_r = norm_r.max((norm - 1.0).abs());
        for w in &vectors[i + 1..] {
            let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
            angle_r = angle_r.max((dot.abs() - alpha).abs());
        }
    }
    (norm_r, angle_r)
}

impl LineSystem {
    fn from_vectors(alpha: f64, dim: Option<usize>, vectors: Vec<Vec<f64>>) -> Result<LineSystem> {
        let dim = dim
            .or_else(|| vectors.first().map(Vec::len))
            .unwrap_or(0);
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch);
        }
        let (max_norm_residual, max_angle_residual) = residuals(alpha, &vectors);
        Ok(LineSystem { alpha, dim, vectors, max_norm_residual, max_angle_residual })
    }

    /// One vector per row, `dim` comma-separated columns, 17 significant
    /// digits so values survive a round trip bit-for-bit.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vectors {
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{:.16e}", x));
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`to_csv`](Self::to_csv) output; `alpha` is not stored in
    /// the CSV and must be supplied. Residuals are recomputed.
    pub fn from_csv(alpha: f64, text: &str) -> Result<LineSystem> {
        let mut vectors = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                let mut row = Vec::with_capacity(trimmed.matches(',').count() + 1);
                for field in trimmed.split(',') {
                    row.push(field.trim().parse::<f64>().map_err(|e| Error::Parse {
                        offset,
                        reason: format!("bad floating-point field {:?}: {}", field.trim(), e),
                    })?);
                }
                vectors.push(row);
            }
            offset += line.len() + 1;
        }
        Self::from_vectors(alpha, None, vectors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonLines {
            alpha: self.alpha,
            dim: self.dim,
            vectors: self.vectors.clone(),
        })
        .expect("finite floats serialize")
    }

    pub fn from_json(text: &str) -> Result<LineSystem> {
        let parsed: JsonLines = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: e.column().saturating_sub(1),
            reason: e.to_string(),
        })?;
        Self::from_vectors(parsed.alpha, Some(parsed.dim), parsed.vectors)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonLines {
    alpha: f64,
    dim: usize,
    vectors: Vec<Vec<f64>>,
}

/// Factors the scaled certificate matrix `2 alpha (lambda I - A + J/2)`,
/// whose diagonal is exactly 1 and whose off-diagonal entries are
/// `-alpha` on edges and `+alpha` elsewhere, into one unit vector per
/// vertex. The ambient dimension is the matrix rank. Fails with
/// `NotCertified` when the graph does not pass its own certificate.
pub fn extract_lines(g: &Graph, alpha: f64) -> Result<LineSystem> {
    let lambda = lambda_of_alpha(alpha)?;
    let (values, vectors) = eigen_descending(&gram_matrix(g, lambda))?;
    let Some(&top) = values.first() else {
        return Err(Error::BadParams("graph has no vertices".into()));
    };
    let cut = RANK_TOL * top.abs().max(1.0);
    let min_eig = *values.last().expect("nonempty");
    if min_eig < -cut {
        return Err(Error::NotCertified(format!(
            "certificate matrix has negative eigenvalue {}",
            min_eig
        )));
    }
    let max_degree = g.degrees().into_iter().max().unwrap_or(0);
    if (max_degree as f64) > (6.0 / alpha.powi(4)).floor() {
        return Err(Error::NotCertified(format!(
            "maximum degree {} exceeds the cap for angle parameter {}",
            max_degree, alpha
        )));
    }
    let kept: Vec<usize> = (0..values.len()).filter(|&i| values[i] > cut).collect();
    let dim = kept.len();
    let n = g.n();
    let mut lines = vec![vec![0.0; dim]; n];
    for (row, &i) in kept.iter().enumerate() {
        let scale = (2.0 * alpha * values[i]).sqrt();
        for v in 0..n {
            lines[v][row] = scale * vectors[i][v];
        }
    }
    let (max_norm_residual, max_angle_residual) = residuals(alpha, &lines);
    if max_norm_residual > NORM_TOL || max_angle_residual > ANGLE_TOL {
        return Err(Error::NotCertified(format!(
            "factorization residuals too large: norm {:e}, angle {:e}",
            max_norm_residual, max_angle_residual
        )));
    }
    Ok(LineSystem { alpha, dim, vectors: lines, max_norm_residual, max_angle_residual })
}

/// True exactly when every vector has unit norm within `tol` and every
/// pair meets at the angle `arccos(alpha)` within `tol`.
pub fn verify_lines(system: &LineSystem, alpha: f64, tol: f64) -> Result<bool> {
    if system.vectors.is_empty() {
        return Err(Error::BadParams("line system has no vectors".into()));
    }
    if system.vectors.iter().any(|v| v.len() != system.dim) {
        return Err(Error::DimensionMismatch);
    }
    let (norm_r, angle_r) = residuals(alpha, &system.vectors);
    Ok(norm_r <= tol && angle_r <= tol)
}

/// Best-effort inverse of [`extract_lines`]: fixes the representative of
/// each line whose first coordinate of magnitude above `tol` is
/// positive, then places an edge exactly where two representatives have
/// negative inner product. Lines determine the graph only up to
/// resigning representatives, so the result is one member of the
/// switching class.
pub fn graph_of_lines(system: &LineSystem, tol: f64) -> Result<Graph> {
    if !verify_lines(system, system.alpha, tol.max(ANGLE_TOL))? {
        return Err(Error::NotCertified(
            "vectors do not realize the stated angle".into(),
        ));
    }
    let rep: Vec<Vec<f64>> = system
        .vectors
        .iter()
        .map(|v| match v.iter().find(|x| x.abs() > tol) {
            Some(first) if *first < 0.0 => v.iter().map(|x| -x).collect(),
            _ => v.clone(),
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..rep.len() {
        for j in i + 1..rep.len() {
            let dot: f64 = rep[i].iter().zip(&rep[j]).map(|(a, b)| a * b).sum();
            if dot < 0.0 {
                edges.push((i, j));
            }
        }
    }
    build_graph(rep.len(), &edges)
}

/// Packs `floor((d - 1) / (kappa - 1))` disjoint copies of a seed graph
/// on `kappa` vertices into dimension `d`, yielding one line per vertex.
/// The seed's spectral radius must equal `(1 - alpha) / (2 alpha)`
/// within `1e-8`. On each copy the certificate kernel loses one
/// dimension to the all-ones constraint, so the rank lands at
/// `t (kappa - 1) + 1 <= d` and the count reaches
/// `floor((d - 1) kappa / (kappa - 1))` whenever `kappa - 1` divides
/// `d - 1`.
pub fn lower_bound_construct(alpha: f64, d: usize, seed: &Graph) -> Result<(Graph, LineSystem)> {
    let lambda = lambda_of_alpha(alpha)?;
    let (top, _) = spectral_radius(seed)?;
    if (top - lambda).abs() > 1e-8 {
        return Err(Error::SeedMismatch(format!(
            "seed spectral radius {} does not match the target {}",
            top, lambda
        )));
    }
    let kappa = seed.n();
    if kappa < 2 {
        return Err(Error::SeedMismatch("seed needs at least two vertices".into()));
    }
    if d < kappa {
        return Err(Error::BadParams(format!(
            "dimension {} cannot hold a copy of a seed on {} vertices",
            d, kappa
        )));
    }
    let copies = (d - 1) / (kappa - 1);
    let g = seed.disjoint_copies(copies)?;
    let cert = certificate_check(&g, alpha, d)?;
    if !cert.accepted {
        return Err(Error::NotCertified(format!(
            "copy construction rejected: psd {}, rank {} against dimension {}, degree_ok {}",
            cert.psd, cert.rank, d, cert.degree_ok
        )));
    }
    let system = extract_lines(&g, alpha)?;
    Ok((g, system))
}

/// Minimum number of vertices over graphs with a given spectral radius,
/// as a parameter to [`max_lines_formula`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralOrder {
    Finite(usize),
    Infinite,
}

/// Maximum line count in dimension `d` at a fixed angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaxLines {
    /// The count exactly.
    Exact(BigUint),
    /// `d` plus an additive error at most `constant`.
    LinearPlusConstant { constant: BigUint },
}

/// For finite spectral order `kappa`, the maximum number of equiangular
/// lines in dimension `d` is exactly `floor((d - 1) kappa / (kappa - 1))`
/// once `d` is large enough. For infinite order the count is linear,
/// `d + O(1)`, and the constant is bounded by one plus the multiplicity
/// bound at `lambda` for the largest degree the angle allows.
pub fn max_lines_formula(alpha: f64, kappa: SpectralOrder, d: usize) -> Result<MaxLines> {
    if d < 2 {
        return Err(Error::BadParams(format!("dimension must be at least 2, got {}", d)));
    }
    match kappa {
        SpectralOrder::Finite(k) => {
            if k < 2 {
                return Err(Error::BadParams(format!(
                    "finite spectral order must be at least 2, got {}",
                    k
                )));
            }
            Ok(MaxLines::Exact(
                BigUint::from(d - 1) * BigUint::from(k) / BigUint::from(k - 1),
            ))
        }
        SpectralOrder::Infinite => {
            let lambda = lambda_of_alpha(alpha)?;
            let delta = (6.0 / alpha.powi(4)).floor() as usize;
            let constant = BigUint::from(1u32) + multiplicity_bound(lambda, delta)?;
            Ok(MaxLines::LinearPlusConstant { constant })
        }
    }
}
