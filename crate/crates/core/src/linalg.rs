//! Minimal dense symmetric linear algebra: full-storage symmetric matrices
//! and a cyclic Jacobi eigensolver.
//!
//! Jacobi was chosen over tridiagonalization because every step is a plain
//! rotation applied in a fixed sweep order: the output is bit-for-bit
//! deterministic for identical input, eigenvectors come out orthonormal to
//! machine precision, and the matrices in this crate are small enough that
//! the extra arithmetic is irrelevant.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Row-major dense symmetric matrix. `set` mirrors both triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zero(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = SymMatrix::zero(g.n());
        for &(u, v) in g.edges() {
            m.set(u, v, 1.0);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = self.get(i, j);
                s += 2.0 * v * v;
            }
        }
        s.sqrt()
    }
}

/// `max_i |M x - lambda x|_i`: how far `(lambda, x)` is from an eigenpair.
pub fn residual_inf(m: &SymMatrix, lambda: f64, x: &[f64]) -> f64 {
    m.mat_vec(x)
        .iter()
        .zip(x)
        .map(|(mx, xi)| (mx - lambda * xi).abs())
        .fold(0.0, f64::max)
}

const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Returns eigenvalues in descending order paired with orthonormal
/// eigenvectors (`vectors[k]` belongs to `values[k]`). Each eigenvector is
/// sign-normalized so its first entry of non-negligible magnitude is
/// positive. Converges when the off-diagonal norm falls below
/// `1e-14 * max(1, |M|_F)`; exceeding the sweep cap is reported as
/// `ConvergenceFailure` rather than returning approximate output.
pub fn eigen_descending(m: &SymMatrix) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = m.n;
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut a = m.clone();
    let mut vec = SymMatrix::zero(n);
    for i in 0..n {
        vec.data[i * n + i] = 1.0;
    }
    let stop = 1e-14 * m.frobenius().max(1.0);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal_norm() <= stop {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let tau = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let vkp = vec.data[k * n + p];
                    let vkq = vec.data[k * n + q];
                    vec.data[k * n + p] = c * vkp - s * vkq;
                    vec.data[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && a.off_diagonal_norm() > stop {
        return Err(Error::ConvergenceFailure(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(j, j)
            .partial_cmp(&a.get(i, i))
            .expect("eigenvalues are finite")
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i)).collect();
    let mut vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| vec.data[row * n + col]).collect())
        .collect();
    for v in &mut vectors {
        let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if let Some(first) = v.iter().find(|x| x.abs() > 1e-12 * scale.max(1.0)) {
            if *first < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }
    Ok((values, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, petersen, FamilyKind};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn empty_and_single() {
        let (vals, vecs) = eigen_descending(&SymMatrix::zero(0)).unwrap();
        assert!(vals.is_empty() && vecs.is_empty());
        let mut m = SymMatrix::zero(1);
        m.set(0, 0, 4.5);
        let (vals, vecs) = eigen_descending(&m).unwrap();
        assert_eq!(vals, vec![4.5]);
        assert_eq!(vecs, vec![vec![1.0]]);
    }

    #[test]
    fn two_by_two_exact() {
        // [[2, 1], [1, 2]] has eigenvalues 3 and 1
        let mut m = SymMatrix::zero(2);
        m.set(0, 0, 2.0);
        m.set(1, 1, 2.0);
        m.set(0, 1, 1.0);
        let (vals, _) = eigen_descending(&m).unwrap();
        assert!(close(vals[0], 3.0, 1e-12));
        assert!(close(vals[1], 1.0, 1e-12));
    }

    #[test]
    fn known_graph_spectra() {
        let k2 = SymMatrix::adjacency(&family(FamilyKind::Complete, &[2]).unwrap());
        let (vals, _) = eigen_descending(&k2).unwrap();
        assert!(close(vals[0], 1.0, 1e-12) && close(vals[1], -1.0, 1e-12));

        let c4 = SymMatrix::adjacency(&family(FamilyKind::Cycle, &[4]).unwrap());
        let (vals, _) = eigen_descending(&c4).unwrap();
        let want = [2.0, 0.0, 0.0, -2.0];
        for (got, w) in vals.iter().zip(want) {
            assert!(close(*got, w, 1e-12), "{:?}", vals);
        }

        // Petersen: 3 once, 1 five times, -2 four times
        let p = SymMatrix::adjacency(&petersen());
        let (vals, _) = eigen_descending(&p).unwrap();
        let want = [3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        for (got, w) in vals.iter().zip(want) {
            assert!(close(*got, w, 1e-10), "{:?}", vals);
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_with_small_residual() {
        let g = family(FamilyKind::Barbell, &[4, 5, 3]).unwrap();
        let m = SymMatrix::adjacency(&g);
        let (vals, vecs) = eigen_descending(&m).unwrap();
        let n = g.n();
        for i in 0..n {
            for j in i..n {
                let dot: f64 = vecs[i].iter().zip(&vecs[j]).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(close(dot, want, 1e-10), "gram({}, {}) = {}", i, j, dot);
            }
            assert!(residual_inf(&m, vals[i], &vecs[i]) <= 1e-10);
        }
        // descending order
        for w in vals.windows(2) {
            assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let g = family(FamilyKind::Theta, &[3, 4, 2]).unwrap();
        let m = SymMatrix::adjacency(&g);
        let a = eigen_descending(&m).unwrap();
        let b = eigen_descending(&m).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }
}
