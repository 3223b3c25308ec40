//! Cyclic Jacobi eigen-solver for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of `h_pq` with a diagonal unitary and
//! then applies the classic real plane rotation that annihilates the resulting
//! real off-diagonal pair. Pairs are visited in row-cyclic order, so output is
//! fully deterministic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, UnitVector, FLOAT_TOL};

/// Convergence threshold on `off(H) / ‖H‖_F`.
pub const JACOBI_TOL: f64 = 1e-12;

/// Sweep cap.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order; column `k` of `vectors` (row-major `n × n`)
/// belongs to `values[k]`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    vectors: Vec<Complex64>,
    n: usize,
    pub sweeps: usize,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self.vectors[i * self.n + k]).collect()
    }
}

/// Full eigen-decomposition of a Hermitian matrix.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_hermitian(FLOAT_TOL) {
        return Err(Error::NotHermitian);
    }
    let n = h.n();
    let (values, vectors, sweeps) = jacobi(h.entries().to_vec(), n, true);
    let vectors = vectors.expect("vectors requested");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let sorted_values = perm.iter().map(|&k| values[k]).collect();
    let mut sorted_vectors = vec![Complex64::new(0.0, 0.0); n * n];
    for (dst, &src) in perm.iter().enumerate() {
        for i in 0..n {
            sorted_vectors[i * n + dst] = vectors[i * n + src];
        }
    }
    Ok(HermitianEigen {
        values: sorted_values,
        vectors: sorted_vectors,
        n,
        sweeps,
    })
}

/// Largest eigenvalue and a unit eigenvector whose first nonzero coordinate is real and nonnegative.
pub fn lambda_max_hermitian(h: &ComplexMatrix) -> Result<(f64, UnitVector)> {
    let eig = hermitian_eigen(h)?;
    let top = eig.values.len() - 1;
    Ok((eig.values[top], normalize_phase(eig.vector(top))))
}

/// Largest eigenvalue only (no vector accumulation). `h` must be Hermitian.
pub(crate) fn lambda_max_unchecked(h: Vec<Complex64>, n: usize) -> f64 {
    let (values, _, _) = jacobi(h, n, false);
    values.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

/// Rescales `v` to unit length and rotates its global phase so the first
/// coordinate that is not negligible becomes real and nonnegative.
pub(crate) fn normalize_phase(mut v: Vec<Complex64>) -> UnitVector {
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let scale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(k) = v.iter().position(|z| z.norm() > 1e-12 * scale) {
        let lead = v[k];
        let phase = lead.conj() / lead.norm();
        v.iter_mut().for_each(|z| *z = *z * phase / norm);
        v[k] = Complex64::new(lead.norm() / norm, 0.0);
    }
    UnitVector::new(v).expect("eigenvector has unit norm")
}

/// Returns (diagonal after convergence, optional eigenvector matrix, sweeps used).
fn jacobi(mut a: Vec<Complex64>, n: usize, want_vectors: bool) -> (Vec<f64>, Option<Vec<Complex64>>, usize) {
    let mut v = want_vectors.then(|| {
        let mut id = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            id[i * n + i] = Complex64::new(1.0, 0.0);
        }
        id
    });
    for i in 0..n {
        a[i * n + i].im = 0.0;
    }
    let total: f64 = a.iter().map(|z| z.norm_sqr()).sum();
    let threshold = JACOBI_TOL * JACOBI_TOL * total;

    let mut sweeps = 0;
    while sweeps < JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].norm_sqr())
            .sum();
        if off <= threshold {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_deref_mut(), n, p, q);
            }
        }
    }
    let diag = (0..n).map(|i| a[i * n + i].re).collect();
    (diag, v, sweeps)
}

fn rotate(a: &mut [Complex64], v: Option<&mut [Complex64]>, n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    // real rotation for the 2x2 block [[app, mag], [mag, aqq]]
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let phase = apq.conj() / mag; // e^{-iφ}

    // W = diag-phase(q) · R:  W_pp = c, W_pq = s, W_qp = -s e^{-iφ}, W_qq = c e^{-iφ}
    let w_pp = Complex64::new(c, 0.0);
    let w_pq = Complex64::new(s, 0.0);
    let w_qp = -phase * s;
    let w_qq = phase * c;

    // A <- A W (columns p, q)
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * w_pp + akq * w_qp;
        a[k * n + q] = akp * w_pq + akq * w_qq;
    }
    // A <- W* A (rows p, q)
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = w_pp.conj() * apk + w_qp.conj() * aqk;
        a[q * n + k] = w_pq.conj() * apk + w_qq.conj() * aqk;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = vkp * w_pp + vkq * w_qp;
            v[k * n + q] = vkp * w_pq + vkq * w_qq;
        }
    }
}
