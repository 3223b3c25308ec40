mod common;

use std::f64::consts::TAU;

use common::*;
use numrad_core::numradius::spectral_radius_hermitian;
use numrad_core::{numerical_radius, Complex64, ComplexMatrix};
use proptest::prelude::*;

fn witness_is_consistent(a: &ComplexMatrix) -> Result<(), TestCaseError> {
    let r = numerical_radius(a);
    let w = r.witness.coords();
    let norm: f64 = w.iter().map(|z| z.norm_sqr()).sum();
    prop_assert!((norm - 1.0).abs() <= 1e-12);
    prop_assert!((0.0..TAU).contains(&r.theta_star));
    let q = a.quadratic_form(w).unwrap();
    prop_assert!((q.norm() - r.value).abs() <= 1e-10 * a.frobenius_norm().max(1.0));
    let lead = w.iter().find(|z| z.norm() > 1e-12).unwrap();
    prop_assert!(lead.im == 0.0 && lead.re >= 0.0);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bounded_by_frobenius_norm(a in matrix(7)) {
        prop_assert!(numerical_radius(&a).value <= a.frobenius_norm() + 1e-9);
    }

    #[test]
    fn homogeneous(a in matrix(6), c in nonzero_complex()) {
        let base = numerical_radius(&a).value;
        let scaled = numerical_radius(&a.scale(c)).value;
        prop_assert!((scaled - c.norm() * base).abs() <= 1e-7 * (c.norm() * base).max(1e-12));
    }

    #[test]
    fn hermitian_agrees_with_spectral_radius(a in hermitian(10, false)) {
        let rho = spectral_radius_hermitian(&a).unwrap();
        prop_assert!((numerical_radius(&a).value - rho).abs() <= 1e-7);
    }

    #[test]
    fn sampled_vectors_never_beat_the_sweep(a in matrix(6), samples in proptest::collection::vec(any::<u64>(), 1)) {
        use rand::{Rng, SeedableRng};
        let eta = numerical_radius(&a).value;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(samples[0]);
        for _ in 0..500 {
            let x: Vec<Complex64> = (0..a.n())
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect();
            let norm: f64 = x.iter().map(|z| z.norm_sqr()).sum();
            if norm < 1e-12 {
                continue;
            }
            prop_assert!(a.quadratic_form(&x).unwrap().norm() / norm <= eta + 1e-8);
        }
    }

    #[test]
    fn witness_invariants(a in matrix(7)) {
        witness_is_consistent(&a)?;
    }

    #[test]
    fn hermitian_witness_invariants(a in hermitian(7, true)) {
        witness_is_consistent(&a)?;
    }
}
