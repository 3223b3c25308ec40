//! Quadratic forms of 0/1 matrices over the probability simplex.
//!
//! For a graph adjacency matrix the simplex maximum of `⟨Ax, x⟩` is exactly
//! `1 − 1/ω`. For a general 0/1 matrix with zero diagonal it is at most
//! `1 − 1/(2ω) − 1/(2n)`; the argument splits `A` into its symmetric support
//! `B = {a_ij a_ji}` and the one-sided remainder `C = A − B`, after filling
//! every mutually-zero pair with a single one.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, SimplexVector, FLOAT_TOL};

pub const DEFAULT_RESTARTS: usize = 20;

/// Replicator trajectories stop once a step gains less than this.
pub const MIN_GAIN: f64 = 1e-14;

pub const MAX_ITERATIONS: usize = 100_000;

/// Size guards of [`simplex_grid_max`].
pub const GRID_MAX_ORDER: usize = 5;
pub const GRID_MAX_DENOMINATOR: usize = 30;

#[derive(Debug, Clone, Serialize)]
pub struct MSResult {
    pub value: f64,
    pub argmax: SimplexVector,
    pub restarts_used: usize,
    pub converged: bool,
    /// False if some trajectory step decreased the objective beyond rounding.
    pub monotone: bool,
}

fn zero_one_check(a: &ComplexMatrix) -> Result<()> {
    if a.is_zero_one_zero_diagonal() {
        Ok(())
    } else {
        Err(Error::NotZeroOne)
    }
}

/// Splits a 0/1 zero-diagonal matrix into `B = {a_ij a_ji}` and `C = A − B`.
pub fn symmetrize_support(a: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    zero_one_check(a)?;
    let b = ComplexMatrix::from_fn(a.n(), |i, j| a.get(i, j) * a.get(j, i));
    let c = a.sub(&b)?;
    Ok((b, c))
}

/// Sets `a_ij = 1` (with `i < j`) for every pair where both `a_ij` and `a_ji` are zero.
///
/// This does not change the bidirectional pattern, so `ω` is preserved, and it
/// can only increase `⟨Ax, x⟩` for nonnegative `x`.
pub fn saturate(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    zero_one_check(a)?;
    let mut out = a.clone();
    let zero = Complex64::new(0.0, 0.0);
    for i in 0..a.n() {
        for j in i + 1..a.n() {
            if a.get(i, j) == zero && a.get(j, i) == zero {
                out.set(i, j, Complex64::new(1.0, 0.0));
            }
        }
    }
    Ok(out)
}

/// `1 − 1/ω`, the simplex maximum for a graph with clique number `ω`.
pub fn ms_bound_symmetric(omega: usize) -> f64 {
    assert!(omega >= 1, "clique number is at least 1");
    1.0 - 1.0 / omega as f64
}

/// `1 − 1/(2ω) − 1/(2n)`.
pub fn lemma1_bound(omega: usize, n: usize) -> Result<f64> {
    if omega == 0 || omega > n {
        return Err(Error::InvalidParameter(format!(
            "clique number {omega} must lie in 1..={n}"
        )));
    }
    Ok(1.0 - 1.0 / (2.0 * omega as f64) - 1.0 / (2.0 * n as f64))
}

struct Trajectory {
    x: Vec<f64>,
    value: f64,
    converged: bool,
    monotone: bool,
}

fn dense_real(s: &ComplexMatrix) -> Vec<f64> {
    s.entries().iter().map(|z| z.re).collect()
}

fn mat_vec_into(s: &[f64], n: usize, x: &[f64], out: &mut [f64]) {
    for (row, o) in s.chunks_exact(n).zip(out.iter_mut()) {
        *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Discrete replicator dynamics `x_i ← x_i (Sx)_i / ⟨Sx, x⟩` from `start`.
fn replicate(s: &[f64], n: usize, start: Vec<f64>) -> Trajectory {
    let mut x = start;
    let mut sx = vec![0.0; n];
    mat_vec_into(s, n, &x, &mut sx);
    let mut f = dot(&x, &sx);
    let mut y = vec![0.0; n];
    let mut sy = vec![0.0; n];
    let mut monotone = true;
    for _ in 0..MAX_ITERATIONS {
        if f.is_nan() || f <= 0.0 {
            return Trajectory {
                x,
                value: f,
                converged: false,
                monotone,
            };
        }
        // Σ x_i (Sx)_i = f, so rescaling by the computed sum only corrects rounding
        let mut total = 0.0;
        for ((yi, xi), si) in y.iter_mut().zip(&x).zip(&sx) {
            *yi = xi * si;
            total += *yi;
        }
        let inv = 1.0 / total;
        for v in y.iter_mut() {
            *v *= inv;
            // decaying coordinates would otherwise go subnormal, which is very slow
            if *v < f64::MIN_POSITIVE {
                *v = 0.0;
            }
        }
        mat_vec_into(s, n, &y, &mut sy);
        let f_new = dot(&y, &sy);
        let gain = f_new - f;
        if gain < -1e-13 * f.max(1.0) {
            monotone = false;
        }
        if gain < MIN_GAIN {
            let (x, value) = if f_new >= f { (y, f_new) } else { (x, f) };
            return Trajectory {
                x,
                value,
                converged: true,
                monotone,
            };
        }
        std::mem::swap(&mut x, &mut y);
        std::mem::swap(&mut sx, &mut sy);
        f = f_new;
    }
    Trajectory {
        x,
        value: f,
        converged: false,
        monotone,
    }
}

/// Start point of restart `index`: uniform for index 0, otherwise normalized
/// exponential weights from the `(seed, index)` substream.
fn restart_start(n: usize, seed: u64, index: usize) -> Vec<f64> {
    if index == 0 {
        return vec![1.0 / n as f64; n];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let weights: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut rng)).collect::<Vec<f64>>();
    let total: f64 = weights.iter().sum();
    weights.into_iter().map(|w| w / total).collect()
}

/// Best replicator-dynamics value of `⟨Sx, x⟩` on the simplex over `restarts` starts.
///
/// `S` must be symmetric, real, nonnegative with zero diagonal.
pub fn replicator_max(s: &ComplexMatrix, restarts: usize, seed: u64) -> Result<MSResult> {
    let valid =
        s.is_symmetric(FLOAT_TOL) && s.entries().iter().all(|z| z.im == 0.0 && z.re >= 0.0) && s.has_zero_diagonal(0.0);
    if !valid {
        return Err(Error::InvalidParameter(
            "replicator input must be symmetric, real, nonnegative, with zero diagonal".into(),
        ));
    }
    if restarts == 0 {
        return Err(Error::InvalidParameter("at least one restart is required".into()));
    }
    let n = s.n();
    let dense = dense_real(s);
    let runs: Vec<Trajectory> = (0..restarts)
        .into_par_iter()
        .map(|k| replicate(&dense, n, restart_start(n, seed, k)))
        .collect();
    let monotone = runs.iter().all(|t| t.monotone);
    let best = runs
        .into_iter()
        .reduce(|best, t| if t.value > best.value { t } else { best })
        .expect("at least one restart");
    let value = s.real_quadratic_form(&best.x)?;
    Ok(MSResult {
        value,
        argmax: SimplexVector::from_weights(best.x)?,
        restarts_used: restarts,
        converged: best.converged,
        monotone,
    })
}

/// Maximizes `⟨Ax, x⟩` over the simplex for a 0/1 zero-diagonal `A` by running
/// replicator dynamics on `(A + Aᵀ)/2`, which has the same real quadratic form.
pub fn general_simplex_max(a: &ComplexMatrix, restarts: usize, seed: u64) -> Result<MSResult> {
    zero_one_check(a)?;
    let s = a.add(&a.transpose())?.scale(Complex64::new(0.5, 0.0));
    let mut result = replicator_max(&s, restarts, seed)?;
    result.value = a.real_quadratic_form(result.argmax.coords())?;
    Ok(result)
}

/// Exhaustive maximum of `Re⟨Ax, x⟩` over simplex points with coordinates in
/// `{0, 1/d, …, 1}`. Only for `n ≤ 5`, `d ≤ 30`.
pub fn simplex_grid_max(a: &ComplexMatrix, denominator: usize) -> Result<f64> {
    let n = a.n();
    if n > GRID_MAX_ORDER || denominator > GRID_MAX_DENOMINATOR {
        return Err(Error::OracleSizeLimit(format!(
            "simplex grid needs n <= {GRID_MAX_ORDER} and denominator <= {GRID_MAX_DENOMINATOR}"
        )));
    }
    if denominator == 0 {
        return Err(Error::InvalidParameter("denominator must be positive".into()));
    }
    let re: Vec<f64> = a.entries().iter().map(|z| z.re).collect();
    let mut parts = vec![0usize; n];
    let mut best = f64::NEG_INFINITY;
    compositions(&mut parts, 0, denominator, &mut |k| {
        let mut total = 0.0;
        for i in 0..n {
            for j in 0..n {
                total += re[i * n + j] * (k[i] * k[j]) as f64;
            }
        }
        best = best.max(total);
    });
    Ok(best / (denominator * denominator) as f64)
}

fn compositions(parts: &mut [usize], pos: usize, remaining: usize, visit: &mut impl FnMut(&[usize])) {
    if pos + 1 == parts.len() {
        parts[pos] = remaining;
        visit(parts);
        return;
    }
    for k in 0..=remaining {
        parts[pos] = k;
        compositions(parts, pos + 1, remaining - k, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(i: usize, j: usize) -> (usize, usize) {
        (i, j)
    }

    fn directed(n: usize, ones: &[(usize, usize)]) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n);
        for &(i, j) in ones {
            m.set(i, j, Complex64::new(1.0, 0.0));
        }
        m
    }

    fn k22() -> ComplexMatrix {
        ComplexMatrix::adjacency(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
    }

    fn k3() -> ComplexMatrix {
        ComplexMatrix::adjacency(3, &[(0, 1), (0, 2), (1, 2)])
    }

    #[test]
    fn symmetrize_examples() {
        let (b, c) = symmetrize_support(&k3()).unwrap();
        assert_eq!(b, k3());
        assert!(c.is_zero());

        let up = directed(2, &[one(0, 1)]);
        let (b, c) = symmetrize_support(&up).unwrap();
        assert!(b.is_zero());
        assert_eq!(c, up);

        assert!(matches!(
            symmetrize_support(&ComplexMatrix::identity(2)),
            Err(Error::NotZeroOne)
        ));
        let two = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]);
        let err = symmetrize_support(&two).unwrap_err();
        assert_eq!(err.to_string(), "not a 0/1 zero-diagonal matrix");
    }

    #[test]
    fn saturate_examples() {
        let s = saturate(&ComplexMatrix::zeros(3)).unwrap();
        assert_eq!(s, directed(3, &[(0, 1), (0, 2), (1, 2)]));
        assert_eq!(saturate(&s).unwrap(), s);
        // K_{2,2} is filled within classes {0,1} and {2,3}
        let filled = saturate(&k22()).unwrap();
        let mut expected = k22();
        expected.set(0, 1, Complex64::new(1.0, 0.0));
        expected.set(2, 3, Complex64::new(1.0, 0.0));
        assert_eq!(filled, expected);
        // a one-directional pair is left alone
        let up = directed(2, &[one(1, 0)]);
        assert_eq!(saturate(&up).unwrap(), up);
    }

    #[test]
    fn bound_formulas() {
        assert_eq!(ms_bound_symmetric(1), 0.0);
        assert_eq!(ms_bound_symmetric(2), 0.5);
        assert!((ms_bound_symmetric(3) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(lemma1_bound(2, 4).unwrap(), 0.625);
        assert_eq!(lemma1_bound(3, 6).unwrap(), 0.75);
        for n in 1..10 {
            assert!((lemma1_bound(n, n).unwrap() - (1.0 - 1.0 / n as f64)).abs() < 1e-15);
        }
        assert!(lemma1_bound(5, 4).is_err());
        assert!(lemma1_bound(0, 4).is_err());
    }

    #[test]
    fn replicator_triangle() {
        let r = replicator_max(&k3(), 5, 7).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-6);
        for x in r.argmax.coords() {
            assert!((x - 1.0 / 3.0).abs() < 1e-6);
        }
        assert!(r.converged && r.monotone);
        assert_eq!(r.restarts_used, 5);
    }

    #[test]
    fn replicator_edgeless() {
        let r = replicator_max(&ComplexMatrix::zeros(4), 3, 1).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(!r.converged);
        assert_eq!(r.argmax, SimplexVector::uniform(4));
    }

    #[test]
    fn replicator_bipartite() {
        let r = replicator_max(&k22(), 20, 3).unwrap();
        assert!((r.value - 0.5).abs() < 1e-6);
    }

    #[test]
    fn replicator_rejects_bad_input() {
        assert!(replicator_max(&directed(2, &[(0, 1)]), 1, 0).is_err());
        assert!(replicator_max(&ComplexMatrix::identity(2), 1, 0).is_err());
        let neg = ComplexMatrix::from_real_rows(&[&[0.0, -1.0], &[-1.0, 0.0]]);
        assert!(replicator_max(&neg, 1, 0).is_err());
        assert!(replicator_max(&k3(), 0, 0).is_err());
    }

    #[test]
    fn replicator_is_deterministic() {
        let g = ComplexMatrix::adjacency(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let a = replicator_max(&g, 12, 99).unwrap();
        let b = replicator_max(&g, 12, 99).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.argmax, b.argmax);
    }

    #[test]
    fn general_max_examples() {
        let up = directed(2, &[(0, 1)]);
        let r = general_simplex_max(&up, 5, 0).unwrap();
        assert!((r.value - 0.25).abs() < 1e-12);
        assert!((r.argmax.coords()[0] - 0.5).abs() < 1e-9);
        assert!(general_simplex_max(&ComplexMatrix::identity(2), 1, 0).is_err());
    }

    #[test]
    fn grid_examples() {
        assert!((simplex_grid_max(&k3(), 12).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((simplex_grid_max(&directed(2, &[(0, 1)]), 10).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(simplex_grid_max(&ComplexMatrix::zeros(3), 7).unwrap(), 0.0);
        assert!(matches!(
            simplex_grid_max(&ComplexMatrix::zeros(6), 4),
            Err(Error::OracleSizeLimit(_))
        ));
        assert!(simplex_grid_max(&ComplexMatrix::zeros(3), 31).is_err());
    }

    #[test]
    fn k22_grid_oracle_is_half() {
        // brute-force simplex grid confirms the replicator value for K_{2,2}
        assert!((simplex_grid_max(&k22(), 30).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn compositions_count() {
        let mut parts = vec![0; 3];
        let mut count = 0;
        compositions(&mut parts, 0, 4, &mut |p| {
            assert_eq!(p.iter().sum::<usize>(), 4);
            count += 1;
        });
        assert_eq!(count, 15); // C(6, 2)
    }
}
