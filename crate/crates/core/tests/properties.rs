//! Randomized invariant checks, plus one exhaustive sweep over the small
//! connected graphs.

use graphspectra::certify::monotonicity_check;
use graphspectra::equiangular::{alpha_of_lambda, gram_matrix, lambda_of_alpha, LineSystem};
use graphspectra::exec::ExecMode;
use graphspectra::graph::{random_connected_graph, random_graph};
use graphspectra::radius_order::enumerate_connected;
use graphspectra::spectra::{
    adjacency_eigen, interlacing_check, radius_limit, spider_radius, spider_threshold,
};
use proptest::prelude::*;

#[test]
fn exhaustive_small_subgraph_monotonicity() {
    for n in 2..=7usize {
        for g in enumerate_connected(n, ExecMode::Parallel).unwrap() {
            let top = adjacency_eigen(&g).unwrap().lambda1();
            for v in 0..n {
                let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                let (sub, _) = g.induced_subgraph(&keep).unwrap();
                let sub_top = adjacency_eigen(&sub).unwrap().lambda1();
                assert!(
                    sub_top <= top + 1e-9,
                    "deleting vertex {} of {} raised the radius",
                    v,
                    g.to_edge_list_string()
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigen_groups_partition_the_spectrum(
        n in 1usize..20,
        p in 0.1f64..0.9,
        seed in 0u64..1_000_000,
    ) {
        let g = random_graph(n, p, seed).unwrap();
        let s = adjacency_eigen(&g).unwrap();
        let total: usize = s.groups.iter().map(|gr| gr.multiplicity).sum();
        prop_assert_eq!(total, n);
        for w in s.values.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
        for w in s.groups.windows(2) {
            prop_assert!(w[0].value > w[1].value);
        }
    }

    #[test]
    fn principal_submatrices_interlace(
        n in 2usize..16,
        p in 0.1f64..0.9,
        seed in 0u64..1_000_000,
        mask in 1u32..65_535,
    ) {
        let g = random_graph(n, p, seed).unwrap();
        let keep: Vec<usize> = (0..n).filter(|&i| mask >> (i % 16) & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let (sub, _) = g.induced_subgraph(&keep).unwrap();
        let a = adjacency_eigen(&g).unwrap();
        let b = adjacency_eigen(&sub).unwrap();
        prop_assert!(interlacing_check(&a.values, &b.values).unwrap());
    }

    #[test]
    fn ladder_threshold_is_monotone(a in 0.01f64..2.12, b in 0.01f64..2.12) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assume!(hi < radius_limit() - 1e-9);
        let t_lo = spider_threshold(lo).unwrap();
        let t_hi = spider_threshold(hi).unwrap();
        prop_assert!(t_lo <= t_hi);
        prop_assert!(spider_radius(t_lo).unwrap() > lo);
        if t_lo > 1 {
            prop_assert!(spider_radius(t_lo - 1).unwrap() <= lo + 1e-12);
        }
    }

    #[test]
    fn scaled_certificate_matrix_is_a_signed_angle_table(
        n in 1usize..12,
        p in 0.0f64..1.0,
        seed in 0u64..100_000,
        alpha in 0.05f64..0.95,
    ) {
        let g = random_graph(n, p, seed).unwrap();
        let lambda = lambda_of_alpha(alpha).unwrap();
        let m = gram_matrix(&g, lambda);
        for i in 0..n {
            prop_assert!((2.0 * alpha * m.get(i, i) - 1.0).abs() < 1e-12);
            for j in i + 1..n {
                let want = if g.has_edge(i, j) { -alpha } else { alpha };
                prop_assert!((2.0 * alpha * m.get(i, j) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn angle_parameter_round_trip(alpha in 0.0001f64..0.9999) {
        let back = alpha_of_lambda(lambda_of_alpha(alpha).unwrap()).unwrap();
        prop_assert!((back - alpha).abs() <= 1e-14);
    }

    #[test]
    fn line_serialization_round_trips(
        rows in prop::collection::vec(prop::collection::vec(-1e6f64..1e6, 4), 1..8),
        alpha in 0.1f64..0.9,
    ) {
        let sys = LineSystem {
            alpha,
            dim: 4,
            vectors: rows.clone(),
            max_norm_residual: 0.0,
            max_angle_residual: 0.0,
        };
        let csv = LineSystem::from_csv(alpha, &sys.to_csv()).unwrap();
        prop_assert_eq!(&csv.vectors, &rows);
        let json = LineSystem::from_json(&sys.to_json()).unwrap();
        prop_assert_eq!(&json.vectors, &rows);
    }

    #[test]
    fn radius_never_rises_under_deletions(
        n in 4usize..12,
        p in 0.3f64..0.7,
        seed in 0u64..100_000,
    ) {
        let g = random_connected_graph(n, p, seed).unwrap();
        let rep = monotonicity_check(&g).unwrap();
        let bad: Vec<_> = rep.entries.iter().filter(|e| !e.ok).collect();
        prop_assert!(bad.is_empty(), "{}: {:?}", g.to_edge_list_string(), bad);
    }
}
