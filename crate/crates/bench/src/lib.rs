//! Deterministic inputs shared by the benchmarks.

use numrad_core::verify::{generate_trial, EnsembleKind, EnsembleSpec};
use numrad_core::ComplexMatrix;

pub const SEED: u64 = 0x5EED;

pub fn complex_gaussian(n: usize) -> ComplexMatrix {
    trial(EnsembleKind::ComplexGaussian, n, 1.0, None)
}

pub fn hermitian_gaussian(n: usize) -> ComplexMatrix {
    trial(EnsembleKind::HermitianGaussian, n, 1.0, None)
}

pub fn zero_one(n: usize, density: f64) -> ComplexMatrix {
    trial(EnsembleKind::ZeroOneRandom, n, density, None)
}

pub fn planted_graph(n: usize, omega: usize, density: f64) -> ComplexMatrix {
    trial(EnsembleKind::PatternPlanted, n, density, Some(omega))
}

fn trial(kind: EnsembleKind, n: usize, density: f64, omega: Option<usize>) -> ComplexMatrix {
    let spec = EnsembleSpec {
        kind,
        n,
        density,
        forced_omega: omega,
        trials: 1,
        seed: SEED,
    };
    generate_trial(&spec, 0).expect("valid benchmark spec")
}
