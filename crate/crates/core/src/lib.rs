//! Spectral analysis of sparse graph families: eigenvalue multiplicity
//! certificates built from nodal counts, exhaustive small-graph searches
//! for spectral-radius order, and equiangular line systems assembled from
//! certified seed graphs.
//!
//! The crate is organized around a handful of self-contained pillars:
//!
//! * [`graph`]: simple graphs, parametric families, graph6 / edge-list IO,
//!   seeded random models.
//! * [`spectra`]: dense adjacency spectra with eigenvalue grouping, the
//!   spider characteristic-polynomial family and its threshold function.
//! * [`nodal`]: sign-pattern analysis of eigenvectors and the constructive
//!   lower bound on nodal-domain counts that drives the multiplicity
//!   certificates.
//! * [`radius_order`]: exhaustive enumeration of small connected graphs up
//!   to isomorphism and the minimum-order search for a given spectral
//!   radius.
//! * [`certify`]: multiplicity bounds for two-cycle graphs and the
//!   decomposition witnesses backing them.
//! * [`equiangular`]: Gram-matrix certificates, line-system extraction and
//!   the counting formulas for equiangular line configurations.
//!
//! Long-running searches take an [`exec::ExecMode`] and run on rayon when
//! the `parallel` feature (default) is enabled; results are identical in
//! both modes.

pub mod certify;
pub mod equiangular;
pub mod error;
pub mod exec;
pub mod graph;
pub mod linalg;
pub mod nodal;
pub mod radius_order;
pub mod spectra;

pub use error::{Error, Result};
