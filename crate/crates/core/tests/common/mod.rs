#![allow(dead_code)]

use numrad_core::{Complex64, ComplexMatrix, PatternGraph, UnitVector};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn nonzero_complex() -> impl Strategy<Value = Complex64> {
    complex().prop_filter("nonzero", |c| c.norm() > 1e-3)
}

pub fn matrix(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_n).prop_flat_map(|n| vec(complex(), n * n).prop_map(move |e| ComplexMatrix::new(n, e).unwrap()))
}

pub fn zero_diagonal(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(max_n).prop_map(|a| {
        let mut a = a;
        for i in 0..a.n() {
            a.set(i, i, Complex64::new(0.0, 0.0));
        }
        a
    })
}

/// `(A + A*)/2`, optionally with a random zero pattern and zero diagonal.
pub fn hermitian(max_n: usize, zero_diag: bool) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        (vec(complex(), n * n), vec(any::<bool>(), n * n)).prop_map(move |(e, keep)| {
            let a = ComplexMatrix::new(n, e).unwrap();
            ComplexMatrix::from_fn(n, |i, j| {
                let (lo, hi) = (i.min(j), i.max(j));
                if (zero_diag && i == j) || !keep[lo * n + hi] {
                    Complex64::new(0.0, 0.0)
                } else {
                    (a.get(i, j) + a.get(j, i).conj()) * 0.5
                }
            })
        })
    })
}

pub fn zero_one(min_n: usize, max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (min_n..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * n).prop_map(move |bits| {
            ComplexMatrix::from_fn(n, |i, j| {
                let on = i != j && bits[i * n + j];
                Complex64::new(if on { 1.0 } else { 0.0 }, 0.0)
            })
        })
    })
}

pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = PatternGraph> {
    (min_n..=max_n, 0.05..0.95f64).prop_flat_map(|(n, p)| {
        vec(0.0..1.0f64, n * n.saturating_sub(1) / 2).prop_map(move |coins| {
            let mut g = PatternGraph::edgeless(n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if coins[k] < p {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

pub fn unit_vector(n: usize) -> impl Strategy<Value = UnitVector> {
    vec(complex(), n)
        .prop_filter("nonzero", |v| v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-6)
        .prop_map(|v| UnitVector::normalize(v).unwrap())
}

pub fn simplex_weights(n: usize) -> impl Strategy<Value = Vec<f64>> {
    vec(0.0..1.0f64, n).prop_filter("positive mass", |w| w.iter().sum::<f64>() > 1e-6)
}
