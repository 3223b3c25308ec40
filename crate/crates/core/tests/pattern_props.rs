mod common;

use common::*;
use numrad_core::pattern::{max_clique, omega_bruteforce, pattern_mass};
use numrad_core::{extract_pattern, omega_exact, PatternGraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn exact_matches_bruteforce(g in graph(1, 12)) {
        prop_assert_eq!(omega_exact(&g), omega_bruteforce(&g).unwrap());
    }

    #[test]
    fn clique_is_a_clique_of_size_omega(g in graph(1, 16)) {
        let c = max_clique(&g);
        prop_assert!(g.is_clique(&c));
        prop_assert_eq!(c.len(), omega_exact(&g));
    }

    #[test]
    fn range_and_extremes(g in graph(1, 14)) {
        let n = g.n();
        let w = omega_exact(&g);
        prop_assert!((1..=n).contains(&w));
        prop_assert_eq!(w == n, g.edge_count() == n * (n - 1) / 2);
        prop_assert_eq!(w == 1, g.edge_count() == 0);
    }

    #[test]
    fn adding_an_edge_never_lowers_omega(g in graph(2, 14), pick in any::<prop::sample::Index>()) {
        let n = g.n();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let (i, j) = pairs[pick.index(pairs.len())];
        let mut h = g.clone();
        h.add_edge(i, j);
        prop_assert!(omega_exact(&h) >= omega_exact(&g));
    }

    #[test]
    fn hermitian_pattern_is_one_sided(a in hermitian(10, true)) {
        let g = extract_pattern(&a, 0.0);
        let n = a.n();
        let one_sided = PatternGraph::from_edges(
            n,
            &(0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j && a.get(i, j).norm() > 0.0)
                .collect::<Vec<_>>(),
        );
        prop_assert_eq!(g, one_sided);
    }

    #[test]
    fn pattern_mass_obeys_clique_bound(a in hermitian(8, true), seed in 0usize..1000) {
        let y = {
            let n = a.n();
            let v: Vec<f64> = (0..n).map(|k| 1.0 + ((seed * 31 + k * 17) % 13) as f64).collect();
            numrad_core::UnitVector::from_real(&v).unwrap()
        };
        let w = omega_exact(&extract_pattern(&a, 0.0));
        prop_assert!(pattern_mass(&a, &y, 0.0).unwrap() <= 1.0 - 1.0 / w as f64 + 1e-9);
    }

    #[test]
    fn pattern_mass_obeys_one_sided_bound(
        (a, y) in zero_diagonal(8).prop_flat_map(|a| { let n = a.n(); (Just(a), unit_vector(n)) })
    ) {
        let n = a.n();
        let w = omega_exact(&extract_pattern(&a, 0.0));
        let bound = 1.0 - 1.0 / (2.0 * w as f64) - 1.0 / (2.0 * n as f64);
        prop_assert!(pattern_mass(&a, &y, 0.0).unwrap() <= bound + 1e-9);
    }
}

#[test]
fn one_sided_pattern_mass_can_exceed_clique_bound() {
    let a = numrad_core::ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let y = numrad_core::UnitVector::from_real(&[1.0, 1.0]).unwrap();
    assert_eq!(omega_exact(&extract_pattern(&a, 0.0)), 1);
    assert!((pattern_mass(&a, &y, 0.0).unwrap() - 0.25).abs() < 1e-15);
}
