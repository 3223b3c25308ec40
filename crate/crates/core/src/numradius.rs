//! Numerical radius `η(A) = max_{‖x‖=1} |⟨Ax, x⟩|`.
//!
//! Uses `η(A) = max_θ λ_max(H(θ))` with `H(θ) = (e^{iθ}A + e^{-iθ}A*)/2`.
//! The phase is scanned on a fixed grid, the best local maxima are refined by
//! golden-section search, and the top eigenvector at the refined phase is
//! returned as a witness.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::eigen::{hermitian_eigen, lambda_max_unchecked, normalize_phase};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, UnitVector, FLOAT_TOL};

/// Number of phase grid points on `[0, 2π)`.
pub const PHASE_GRID: usize = 720;

/// Number of grid brackets refined by golden-section search.
pub const REFINE_BRACKETS: usize = 5;

/// Bracket width at which refinement stops.
pub const PHASE_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct RadiusResult {
    pub value: f64,
    pub theta_star: f64,
    pub witness: UnitVector,
    /// Number of eigenvalue evaluations.
    pub iterations: usize,
}

/// `H(θ) = (e^{iθ}A + e^{-iθ}A*)/2`, exactly Hermitian.
pub fn rotated_hermitian_part(a: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    ComplexMatrix::new(a.n(), rotated_entries(a, theta)).expect("finite input gives finite output")
}

fn rotated_entries(a: &ComplexMatrix, theta: f64) -> Vec<Complex64> {
    let n = a.n();
    let rot = Complex64::from_polar(1.0, theta);
    let mut h = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        h[i * n + i] = Complex64::new((rot * a.get(i, i)).re, 0.0);
        for j in i + 1..n {
            let z = (rot * a.get(i, j) + (rot * a.get(j, i)).conj()) * 0.5;
            h[i * n + j] = z;
            h[j * n + i] = z.conj();
        }
    }
    h
}

fn phase_value(a: &ComplexMatrix, theta: f64) -> f64 {
    lambda_max_unchecked(rotated_entries(a, theta), a.n())
}

/// `max(|λ_min|, |λ_max|)` of a Hermitian matrix, which equals its numerical radius.
pub fn spectral_radius_hermitian(a: &ComplexMatrix) -> Result<f64> {
    if !a.is_hermitian(FLOAT_TOL) {
        return Err(Error::NotHermitian);
    }
    let eig = hermitian_eigen(a)?;
    let lo = eig.values[0];
    let hi = eig.values[eig.values.len() - 1];
    Ok(hi.max(-lo))
}

pub fn numerical_radius(a: &ComplexMatrix) -> RadiusResult {
    if a.is_zero() {
        return RadiusResult {
            value: 0.0,
            theta_star: 0.0,
            witness: UnitVector::basis(a.n(), 0),
            iterations: 0,
        };
    }
    if a.is_hermitian(FLOAT_TOL) {
        return hermitian_radius(a);
    }

    let grid: Vec<f64> = (0..PHASE_GRID)
        .into_par_iter()
        .map(|k| phase_value(a, grid_phase(k)))
        .collect();
    let seeds = refinement_seeds(&grid, REFINE_BRACKETS);

    let refined: Vec<(f64, f64, usize)> = seeds
        .par_iter()
        .map(|&k| {
            let lo = grid_phase(k) - TAU / PHASE_GRID as f64;
            let hi = grid_phase(k) + TAU / PHASE_GRID as f64;
            golden_max(|t| phase_value(a, t), lo, hi, (grid_phase(k), grid[k]))
        })
        .collect();

    let mut iterations = PHASE_GRID;
    let mut best = (grid_phase(seeds[0]), grid[seeds[0]]);
    for &(theta, value, evals) in &refined {
        iterations += evals;
        if value > best.1 {
            best = (theta, value);
        }
    }

    let h = rotated_hermitian_part(a, best.0);
    let eig = hermitian_eigen(&h).expect("rotated part is hermitian");
    iterations += 1;
    let witness = normalize_phase(eig.vector(a.n() - 1));
    let q = a.quadratic_form(witness.coords()).expect("dimensions agree");
    RadiusResult {
        value: q.norm(),
        theta_star: (-q.arg()).rem_euclid(TAU),
        witness,
        iterations,
    }
}

fn hermitian_radius(a: &ComplexMatrix) -> RadiusResult {
    let eig = hermitian_eigen(a).expect("checked hermitian");
    let lo = eig.values[0];
    let hi = eig.values[eig.values.len() - 1];
    let (value, theta_star, k) = if hi >= -lo {
        (hi, 0.0, eig.values.len() - 1)
    } else {
        (-lo, PI, 0)
    };
    RadiusResult {
        value,
        theta_star,
        witness: normalize_phase(eig.vector(k)),
        iterations: 1,
    }
}

#[inline]
fn grid_phase(k: usize) -> f64 {
    TAU * k as f64 / PHASE_GRID as f64
}

/// Indices of the highest cyclic local maxima of `grid`, pairwise non-adjacent,
/// best first (ties by lower index).
fn refinement_seeds(grid: &[f64], count: usize) -> Vec<usize> {
    let len = grid.len();
    let mut maxima: Vec<usize> = (0..len)
        .filter(|&k| grid[k] >= grid[(k + len - 1) % len] && grid[k] >= grid[(k + 1) % len])
        .collect();
    maxima.sort_by(|&a, &b| grid[b].total_cmp(&grid[a]).then(a.cmp(&b)));
    let mut seeds: Vec<usize> = Vec::with_capacity(count);
    for k in maxima {
        if seeds.len() == count {
            break;
        }
        let adjacent = seeds.iter().any(|&s| {
            let d = s.abs_diff(k);
            d.min(len - d) <= 1
        });
        if !adjacent {
            seeds.push(k);
        }
    }
    seeds
}

/// Golden-section search for a maximum on `[lo, hi]`; returns the best
/// `(θ, f(θ))` seen (including `start`) and the number of evaluations.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, start: (f64, f64)) -> (f64, f64, usize) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut best = start;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    for (x, fx) in [(x1, f1), (x2, f2)] {
        if fx > best.1 {
            best = (x, fx);
        }
    }
    while hi - lo > PHASE_WIDTH {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
            if f1 > best.1 {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
            if f2 > best.1 {
                best = (x2, f2);
            }
        }
        evals += 1;
    }
    (best.0.rem_euclid(TAU), best.1, evals)
}
