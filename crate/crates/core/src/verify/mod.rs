//! Checks of the numerical radius, simplex and edge-count inequalities, and
//! seeded sweeps over random ensembles.

mod ensemble;
mod report;

pub use ensemble::{generate_ensemble, generate_trial, substream, EnsembleKind, EnsembleSpec};
pub use report::{
    format_g17, from_json, read_csv, to_json, write_csv, BoundId, BoundReport, Counterexample, CSV_HEADER, HOLDS_TOL,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, FLOAT_TOL};
use crate::motzkin::{general_simplex_max, lemma1_bound, ms_bound_symmetric, replicator_max};
use crate::numradius::numerical_radius;
use crate::pattern::{extract_pattern, omega_exact};

/// `ω` of the exact (tolerance 0) pattern: every stored nonzero counts.
fn exact_omega(a: &ComplexMatrix) -> usize {
    omega_exact(&extract_pattern(a, 0.0))
}

/// `η²(A) ≤ (1 − 1/ω)‖A‖²` for Hermitian `A` with zero diagonal.
pub fn check_theorem1(a: &ComplexMatrix) -> Result<BoundReport> {
    if !a.is_hermitian(FLOAT_TOL) {
        return Err(Error::NotHermitian);
    }
    if !a.has_zero_diagonal(FLOAT_TOL) {
        return Err(Error::NonzeroDiagonal);
    }
    let omega = exact_omega(a);
    let frob_sq = a.frobenius_norm_sq();
    let radius = numerical_radius(a);
    let rhs = (1.0 - 1.0 / omega as f64) * frob_sq;
    Ok(BoundReport::new(
        BoundId::Theorem1,
        a.n(),
        omega,
        frob_sq,
        radius.value * radius.value,
        rhs,
    )
    .with_witness(radius.witness.to_pairs()))
}

/// `η²(A) ≤ (1 − 1/(2ω) − 1/(2n))‖A‖²` for any `A` with zero diagonal.
pub fn check_theorem2(a: &ComplexMatrix) -> Result<BoundReport> {
    if !a.has_zero_diagonal(FLOAT_TOL) {
        return Err(Error::NonzeroDiagonal);
    }
    let n = a.n();
    let omega = exact_omega(a);
    let frob_sq = a.frobenius_norm_sq();
    let radius = numerical_radius(a);
    let rhs = lemma1_bound(omega, n)? * frob_sq;
    Ok(
        BoundReport::new(BoundId::Theorem2, n, omega, frob_sq, radius.value * radius.value, rhs)
            .with_witness(radius.witness.to_pairs()),
    )
}

fn simplex_witness(x: &[f64]) -> Vec<[f64; 2]> {
    x.iter().map(|&v| [v, 0.0]).collect()
}

/// `max_{x∈P_n} ⟨Ax, x⟩ ≤ 1 − 1/(2ω) − 1/(2n)` for a 0/1 `A` with zero diagonal.
/// The left side is the best replicator value, so it is a lower estimate of the maximum.
pub fn check_lemma1(a: &ComplexMatrix, solver_restarts: usize, seed: u64) -> Result<BoundReport> {
    if !a.is_zero_one_zero_diagonal() {
        return Err(Error::NotZeroOne);
    }
    let n = a.n();
    let omega = exact_omega(a);
    let best = general_simplex_max(a, solver_restarts, seed)?;
    let rhs = lemma1_bound(omega, n)?;
    Ok(
        BoundReport::new(BoundId::Lemma1, n, omega, a.frobenius_norm_sq(), best.value, rhs)
            .with_witness(simplex_witness(best.argmax.coords())),
    )
}

/// `m ≤ (1 − 1/ω) n²/2` for a graph adjacency matrix with `m` edges.
pub fn check_turan_edge_bound(a: &ComplexMatrix) -> Result<BoundReport> {
    if !a.is_adjacency() {
        return Err(Error::NotAdjacency);
    }
    let n = a.n();
    let ones = a.ones_count().expect("checked 0/1");
    let omega = exact_omega(a);
    let m = (ones / 2) as f64;
    let rhs = ms_bound_symmetric(omega) * (n * n) as f64 / 2.0;
    Ok(BoundReport::new(BoundId::Turan, n, omega, ones as f64, m, rhs))
}

/// `max_{x∈P_n} ⟨Ax, x⟩ ≤ 1 − 1/ω` for a graph adjacency matrix.
pub fn check_ms(a: &ComplexMatrix, solver_restarts: usize, seed: u64) -> Result<BoundReport> {
    if !a.is_adjacency() {
        return Err(Error::NotAdjacency);
    }
    let omega = exact_omega(a);
    let best = replicator_max(a, solver_restarts, seed)?;
    Ok(BoundReport::new(
        BoundId::Ms,
        a.n(),
        omega,
        a.frobenius_norm_sq(),
        best.value,
        ms_bound_symmetric(omega),
    )
    .with_witness(simplex_witness(best.argmax.coords())))
}

/// Runs the check named by `bound`.
pub fn check(bound: BoundId, a: &ComplexMatrix, solver_restarts: usize, seed: u64) -> Result<BoundReport> {
    match bound {
        BoundId::Theorem1 => check_theorem1(a),
        BoundId::Theorem2 => check_theorem2(a),
        BoundId::Lemma1 => check_lemma1(a, solver_restarts, seed),
        BoundId::Turan => check_turan_edge_bound(a),
        BoundId::Ms => check_ms(a, solver_restarts, seed),
    }
}

/// Whether every matrix of `kind` satisfies the hypotheses of `bound`.
pub fn applicable(bound: BoundId, kind: EnsembleKind) -> bool {
    use EnsembleKind::*;
    match bound {
        BoundId::Theorem1 => matches!(kind, HermitianGaussian | PatternPlanted),
        BoundId::Theorem2 => true,
        BoundId::Lemma1 => matches!(kind, ZeroOneRandom | PatternPlanted),
        BoundId::Turan | BoundId::Ms => kind == PatternPlanted,
    }
}

/// Seed of the simplex solver for a given sweep trial.
pub fn solver_seed(seed: u64, trial: usize) -> u64 {
    // splitmix64 finalizer over (seed, trial)
    let mut z = seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub bound_id: BoundId,
    pub ensemble: EnsembleKind,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub min_slack: f64,
    pub mean_slack: f64,
    pub all_hold: bool,
    pub degenerate: usize,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub reports: Vec<BoundReport>,
    pub summary: SweepSummary,
}

/// Checks `bound` on every trial of `spec`. Trials run in parallel; the result
/// equals sequential execution. The first violated trial (lowest index) is
/// returned as [`Error::Counterexample`] together with its matrix.
pub fn sweep(spec: &EnsembleSpec, bound: BoundId, solver_restarts: usize) -> Result<SweepOutcome> {
    spec.validate()?;
    if !applicable(bound, spec.kind) {
        return Err(Error::Inapplicable {
            bound: bound.to_string(),
            ensemble: spec.kind.to_string(),
        });
    }
    let rows: Vec<(BoundReport, ComplexMatrix)> = (0..spec.trials)
        .into_par_iter()
        .map(|k| {
            let a = generate_trial(spec, k)?;
            let mut report = check(bound, &a, solver_restarts, solver_seed(spec.seed, k))?;
            report.seed = Some(spec.seed);
            report.trial = Some(k as u64);
            report.witness = None;
            Ok((report, a))
        })
        .collect::<Result<_>>()?;

    if let Some((report, matrix)) = rows.iter().find(|(r, _)| !r.holds) {
        return Err(Error::Counterexample(Box::new(Counterexample {
            report: report.clone(),
            matrix: matrix.clone(),
        })));
    }

    let reports: Vec<BoundReport> = rows.into_iter().map(|(r, _)| r).collect();
    let min_slack = reports.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min);
    let mean_slack = reports.iter().map(|r| r.slack).sum::<f64>() / reports.len() as f64;
    let summary = SweepSummary {
        bound_id: bound,
        ensemble: spec.kind,
        n: spec.n,
        trials: spec.trials,
        seed: spec.seed,
        min_slack,
        mean_slack,
        all_hold: true,
        degenerate: reports.iter().filter(|r| r.degenerate).count(),
    };
    Ok(SweepOutcome { reports, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{clique_plus_isolated, turan_adjacency, turan_partite_filled};
    use crate::motzkin::saturate;

    #[test]
    fn theorem1_equality_instance() {
        let r = check_theorem1(&clique_plus_isolated(5, 3).unwrap()).unwrap();
        assert!(r.slack.abs() < 1e-8, "{r:?}");
        assert!(r.holds && !r.degenerate);
        assert_eq!(r.omega, 3);
    }

    #[test]
    fn theorem1_zero_matrix_is_degenerate() {
        let r = check_theorem1(&ComplexMatrix::zeros(3)).unwrap();
        assert!(r.degenerate);
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
    }

    #[test]
    fn theorem1_hypotheses() {
        let up = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(check_theorem1(&up).unwrap_err().to_string(), "not hermitian");
        let mut k3 = clique_plus_isolated(3, 3).unwrap();
        k3.set(1, 1, crate::Complex64::new(1.0, 0.0));
        assert_eq!(check_theorem1(&k3).unwrap_err().to_string(), "nonzero diagonal");
    }

    #[test]
    fn theorem2_examples() {
        let r = check_theorem2(&turan_partite_filled(4, 2).unwrap()).unwrap();
        assert!((r.lhs - 6.25).abs() < 1e-7 && r.rhs == 6.25, "{r:?}");
        assert!(r.slack.abs() < 1e-7);

        let up = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let r = check_theorem2(&up).unwrap();
        assert!((r.lhs - 0.25).abs() < 1e-12);
        assert_eq!(r.rhs, 0.25);
        assert!(r.degenerate && r.holds);

        assert!(check_theorem2(&ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn lemma1_examples() {
        let r = check_lemma1(&turan_partite_filled(6, 3).unwrap(), 20, 0).unwrap();
        assert!((r.lhs - 0.75).abs() < 1e-6 && (r.rhs - 0.75).abs() < 1e-15);

        // uniform x gives 16/25, but class weights (9/17, 8/17) give 11/17
        let a = turan_partite_filled(5, 2).unwrap();
        let uniform = a.real_quadratic_form(&[0.2; 5]).unwrap();
        assert!((uniform - 0.64).abs() < 1e-15);
        let r = check_lemma1(&a, 20, 0).unwrap();
        assert!((r.lhs - 11.0 / 17.0).abs() < 1e-6, "{r:?}");
        assert!((crate::motzkin::simplex_grid_max(&a, 17).unwrap() - 11.0 / 17.0).abs() < 1e-12);
        assert!((r.rhs - 0.65).abs() < 1e-15);

        let zero = ComplexMatrix::zeros(2);
        let r = check_lemma1(&zero, 20, 0).unwrap();
        assert_eq!(r.lhs, 0.0);
        let r = check_lemma1(&saturate(&zero).unwrap(), 20, 0).unwrap();
        assert!((r.lhs - 0.25).abs() < 1e-12 && r.rhs == 0.25 && r.degenerate);

        let two = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]);
        assert!(matches!(check_lemma1(&two, 1, 0), Err(Error::NotZeroOne)));
    }

    #[test]
    fn turan_examples() {
        let r = check_turan_edge_bound(&turan_adjacency(4, 2).unwrap()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.slack), (4.0, 4.0, 0.0));
        let r = check_turan_edge_bound(&clique_plus_isolated(3, 3).unwrap()).unwrap();
        assert!((r.lhs - 3.0).abs() < 1e-15 && (r.rhs - 3.0).abs() < 1e-12);
        let c5 = ComplexMatrix::adjacency(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = check_turan_edge_bound(&c5).unwrap();
        assert_eq!((r.lhs, r.rhs), (5.0, 6.25));
        assert!(check_turan_edge_bound(&turan_partite_filled(4, 2).unwrap()).is_err());
    }

    #[test]
    fn sweep_rejects_inapplicable() {
        let spec = EnsembleSpec::new(EnsembleKind::ComplexGaussian, 4, 1.0, 2, 0);
        assert!(matches!(
            sweep(&spec, BoundId::Theorem1, 20),
            Err(Error::Inapplicable { .. })
        ));
        let spec = EnsembleSpec::new(EnsembleKind::ComplexGaussian, 4, 1.0, 0, 0);
        assert!(sweep(&spec, BoundId::Theorem2, 20).is_err());
    }

    #[test]
    fn sweep_reports_every_trial() {
        let spec = EnsembleSpec::new(EnsembleKind::HermitianGaussian, 5, 0.6, 12, 3);
        let out = sweep(&spec, BoundId::Theorem1, 20).unwrap();
        assert_eq!(out.reports.len(), 12);
        assert!(out.reports.iter().all(|r| r.holds));
        assert_eq!(out.reports[7].trial, Some(7));
        assert!(out.summary.min_slack >= -HOLDS_TOL);
        assert!(out.summary.mean_slack >= out.summary.min_slack);
    }

    #[test]
    fn solver_seeds_differ_by_trial() {
        assert_ne!(solver_seed(1, 0), solver_seed(1, 1));
        assert_ne!(solver_seed(1, 0), solver_seed(2, 0));
    }
}
