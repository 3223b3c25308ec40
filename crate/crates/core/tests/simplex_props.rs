mod common;

use common::*;
use numrad_core::motzkin::{
    general_simplex_max, lemma1_bound, ms_bound_symmetric, replicator_max, saturate, simplex_grid_max,
    symmetrize_support,
};
use numrad_core::{extract_pattern, omega_exact, ComplexMatrix, PatternGraph, SimplexVector};
use proptest::collection::vec;
use proptest::prelude::*;

fn with_simplex(a: ComplexMatrix) -> impl Strategy<Value = (ComplexMatrix, SimplexVector)> {
    let n = a.n();
    (
        Just(a),
        simplex_weights(n).prop_map(|w| SimplexVector::from_weights(w).unwrap()),
    )
}

fn omega(a: &ComplexMatrix) -> usize {
    omega_exact(&extract_pattern(a, 0.0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn decomposition_identities((a, x) in zero_one(1, 10).prop_flat_map(|a| with_simplex(saturate(&a).unwrap()))) {
        let (b, c) = symmetrize_support(&a).unwrap();
        let x = x.coords();
        let norm_sq: f64 = x.iter().map(|v| v * v).sum();
        let bx = b.real_quadratic_form(x).unwrap();
        let cx = c.real_quadratic_form(x).unwrap();
        prop_assert!((bx + 2.0 * cx - (1.0 - norm_sq)).abs() <= 1e-12);
        let ax = a.real_quadratic_form(x).unwrap();
        prop_assert!((ax - 0.5 * (1.0 - norm_sq) - 0.5 * bx).abs() <= 1e-12);
    }

    #[test]
    fn saturation_keeps_omega_and_raises_form((a, x) in zero_one(1, 10).prop_flat_map(with_simplex)) {
        let s = saturate(&a).unwrap();
        prop_assert_eq!(omega(&s), omega(&a));
        let x = x.coords();
        prop_assert!(s.real_quadratic_form(x).unwrap() >= a.real_quadratic_form(x).unwrap());
    }

    #[test]
    fn simplex_max_within_bound(a in zero_one(1, 10), seed in any::<u64>()) {
        let r = general_simplex_max(&a, 8, seed).unwrap();
        prop_assert!(r.monotone);
        prop_assert!(r.value <= lemma1_bound(omega(&a), a.n()).unwrap() + 1e-8);
        prop_assert!((r.value - a.real_quadratic_form(r.argmax.coords()).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn replicator_finds_clique_value(g in graph(1, 10), seed in any::<u64>()) {
        let a = g.to_matrix();
        let r = replicator_max(&a, 20, seed).unwrap();
        let target = ms_bound_symmetric(omega_exact(&g));
        prop_assert!(r.monotone);
        prop_assert!(r.value >= target - 1e-4 && r.value <= target + 1e-9, "{} vs {}", r.value, target);
    }

    #[test]
    fn simplex_max_beats_grid(a in zero_one(1, 5), seed in any::<u64>()) {
        let grid = simplex_grid_max(&a, 12).unwrap();
        prop_assert!(general_simplex_max(&a, 20, seed).unwrap().value >= grid - 1e-9);
    }

    #[test]
    fn restarts_are_deterministic(a in zero_one(2, 8), seed in any::<u64>()) {
        let first = general_simplex_max(&a, 6, seed).unwrap();
        let second = general_simplex_max(&a, 6, seed).unwrap();
        prop_assert_eq!(first.value.to_bits(), second.value.to_bits());
        prop_assert_eq!(first.argmax.coords(), second.argmax.coords());
    }

    #[test]
    fn edge_weights_are_what_count(bits in vec(any::<bool>(), 6)) {
        let mut g = PatternGraph::edgeless(4);
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (on, &(i, j)) in bits.iter().zip(&pairs) {
            if *on {
                g.add_edge(i, j);
            }
        }
        let a = g.to_matrix();
        let r = replicator_max(&a, 20, 1).unwrap();
        prop_assert!((r.value - ms_bound_symmetric(omega_exact(&g))).abs() <= 1e-4);
    }
}
