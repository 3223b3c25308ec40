//! Instances attaining the bounds, and a certifier for the Hermitian equality
//! configuration `(c, N_0 ∪ … ∪ N_r, x)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, UnitVector, FLOAT_TOL};
use crate::numradius::numerical_radius;
use crate::pattern::{extract_pattern, omega_exact};

/// Default absolute tolerance for certification (entries and class masses).
pub const CERTIFY_TOL: f64 = 1e-8;

/// Tolerance on class masses accepted by [`proposition_matrix`].
const CONFIG_TOL: f64 = 1e-10;

/// Balanced partition of `0..n` into `r` contiguous classes, larger classes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartiteSpec {
    pub n: usize,
    pub r: usize,
    pub nu: usize,
    pub class_sizes: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        check_order(n, r)?;
        let nu = n % r;
        let q = n / r;
        let class_sizes = (0..r).map(|k| if k < nu { q + 1 } else { q }).collect();
        Ok(PartiteSpec { n, r, nu, class_sizes })
    }

    /// Class label (0-based) of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        self.class_sizes
            .iter()
            .enumerate()
            .flat_map(|(k, &size)| std::iter::repeat_n(k, size))
            .collect()
    }

    /// Edge count of the complete r-partite graph, `Σ_{k<l} s_k s_l`.
    pub fn edge_count(&self) -> u64 {
        let total = self.n as u64;
        let within: u64 = self.class_sizes.iter().map(|&s| (s * s) as u64).sum();
        (total * total - within) / 2
    }
}

fn check_order(n: usize, r: usize) -> Result<()> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Adjacency matrix of the balanced complete r-partite graph.
pub fn turan_adjacency(n: usize, r: usize) -> Result<ComplexMatrix> {
    let labels = PartiteSpec::new(n, r)?.labels();
    Ok(ComplexMatrix::from_fn(n, |i, j| {
        if labels[i] != labels[j] {
            one()
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// The balanced complete r-partite adjacency with the strictly upper entries
/// inside each class also set to one: `a_ij = 1` iff `i, j` lie in different
/// classes, or `i < j` in the same class.
pub fn turan_partite_filled(n: usize, r: usize) -> Result<ComplexMatrix> {
    let labels = PartiteSpec::new(n, r)?.labels();
    Ok(ComplexMatrix::from_fn(n, |i, j| {
        if labels[i] != labels[j] || i < j {
            one()
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// `C(n,2) + C(r,2)(n² − ν²)/r² + C(ν,2)` in exact integer arithmetic.
pub fn turan_filled_frob_sq(n: usize, r: usize) -> Result<u64> {
    check_order(n, r)?;
    let (n, r) = (n as u128, r as u128);
    let nu = n % r;
    let choose2 = |k: u128| k * k.saturating_sub(1) / 2;
    let numerator = choose2(r) * (n * n - nu * nu);
    debug_assert_eq!(numerator % (r * r), 0);
    Ok((choose2(n) + numerator / (r * r) + choose2(nu)) as u64)
}

/// Adjacency matrix of `K_r` on the first `r` vertices plus `n − r` isolated vertices.
pub fn clique_plus_isolated(n: usize, r: usize) -> Result<ComplexMatrix> {
    check_order(n, r)?;
    Ok(ComplexMatrix::from_fn(n, |i, j| {
        if i != j && i < r && j < r {
            one()
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// Hermitian matrix with `a_ij = c x_i conj(x_j)` for `i < j` in different
/// classes, zero within classes and on `N_0`, completed by `a_ji = conj(a_ij)`.
///
/// `labels[i] = 0` puts vertex `i` in `N_0`; labels `1..=r` are the classes.
/// Requires `x_i = 0` on `N_0` and class masses `Σ_{i∈N_k} |x_i|² = 1/r`.
pub fn proposition_matrix(labels: &[usize], x: &UnitVector, c: Complex64) -> Result<ComplexMatrix> {
    let n = labels.len();
    if x.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.len(),
        });
    }
    if c == Complex64::new(0.0, 0.0) {
        return Err(Error::InvalidParameter("c must be nonzero".into()));
    }
    let r = labels.iter().copied().max().unwrap_or(0);
    if r < 2 {
        return Err(Error::NotEqualityConfiguration("need at least two classes".into()));
    }
    let coords = x.coords();
    if let Some(i) = (0..n).find(|&i| labels[i] == 0 && coords[i].norm() > CONFIG_TOL) {
        return Err(Error::NotEqualityConfiguration(format!(
            "vertex {i} is in N_0 but has nonzero weight"
        )));
    }
    let masses = class_masses(labels, coords, r);
    let target = 1.0 / r as f64;
    if let Some((k, m)) = masses
        .iter()
        .enumerate()
        .find(|(_, m)| (*m - target).abs() > CONFIG_TOL)
    {
        return Err(Error::NotEqualityConfiguration(format!(
            "class {} has mass {m}, expected 1/{r}",
            k + 1
        )));
    }

    let mut a = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            if labels[i] != 0 && labels[j] != 0 && labels[i] != labels[j] {
                let z = c * coords[i] * coords[j].conj();
                a.set(i, j, z);
                a.set(j, i, z.conj());
            }
        }
    }
    Ok(a)
}

/// `Σ_{i∈N_k} |x_i|²` for `k = 1..=r`.
fn class_masses(labels: &[usize], coords: &[Complex64], r: usize) -> Vec<f64> {
    let mut masses = vec![0.0; r];
    for (&k, z) in labels.iter().zip(coords) {
        if k >= 1 {
            masses[k - 1] += z.norm_sqr();
        }
    }
    masses
}

#[derive(Debug, Clone, Serialize)]
pub struct EqualityCertificate {
    /// Inferred scale; `None` when no pair determines it.
    pub c: Option<[f64; 2]>,
    /// Inferred labels: 0 for `N_0`, classes numbered from 1 by smallest member.
    pub partition: Vec<usize>,
    pub x: UnitVector,
    /// `ω(A)`.
    pub r: usize,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
    pub overall: bool,
    /// `η²(A)` and `(1 − 1/r)‖A‖²`, reported independently of the three conditions.
    pub eta_sq: f64,
    pub bound: f64,
    pub numeric_equality: bool,
}

/// Infers `(c, partition)` from a Hermitian zero-diagonal `A` and a unit vector
/// `x`, then checks the three equality conditions:
///
/// 1. `x_i = 0` on `N_0` (the coordinates with `|x_i| ≤ tol`);
/// 2. there are exactly `r = ω(A)` classes, each of mass `1/r`;
/// 3. `a_ij = c x_i conj(x_j)` for `i < j` outside a common class, and `a_ij = 0` inside one.
///
/// `c` comes from the first `i < j` with `a_ij ≠ 0` and `x_i x_j ≠ 0`. Classes
/// are the connected components of the pairs where `a_ij` deviates from
/// `c x_i conj(x_j)`.
pub fn check_equality_conditions(a: &ComplexMatrix, x: &UnitVector, tol: f64) -> Result<EqualityCertificate> {
    if !a.is_hermitian(FLOAT_TOL) {
        return Err(Error::NotHermitian);
    }
    if !a.has_zero_diagonal(FLOAT_TOL) {
        return Err(Error::NonzeroDiagonal);
    }
    let n = a.n();
    if x.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.len(),
        });
    }
    let r = omega_exact(&extract_pattern(a, FLOAT_TOL));
    if r < 2 {
        return Err(Error::InvalidParameter(
            "equality certification needs omega >= 2".into(),
        ));
    }
    let coords = x.coords();
    let support: Vec<bool> = coords.iter().map(|z| z.norm() > tol).collect();

    let condition_i = (0..n).filter(|&i| !support[i]).all(|i| coords[i].norm() <= tol);

    let c = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| support[i] && support[j] && a.get(i, j).norm() > tol)
        .map(|(i, j)| a.get(i, j) / (coords[i] * coords[j].conj()));

    let eta = numerical_radius(a).value;
    let eta_sq = eta * eta;
    let bound = (1.0 - 1.0 / r as f64) * a.frobenius_norm_sq();
    let numeric_equality = (eta_sq - bound).abs() <= CERTIFY_TOL * bound.max(1.0);

    let Some(c) = c else {
        return Ok(EqualityCertificate {
            c: None,
            partition: vec![0; n],
            x: x.clone(),
            r,
            condition_i,
            condition_ii: false,
            condition_iii: false,
            overall: false,
            eta_sq,
            bound,
            numeric_equality,
        });
    };

    let predicted = |i: usize, j: usize| c * coords[i] * coords[j].conj();
    let partition = infer_classes(n, &support, |i, j| (a.get(i, j) - predicted(i, j)).norm() > tol);
    let classes = partition.iter().copied().max().unwrap_or(0);

    let target = 1.0 / r as f64;
    let condition_ii = classes == r
        && class_masses(&partition, coords, classes)
            .iter()
            .all(|m| (m - target).abs() <= tol);

    let condition_iii = (0..n).all(|i| {
        (i + 1..n).all(|j| {
            if partition[i] != 0 && partition[i] == partition[j] {
                a.get(i, j).norm() <= tol
            } else {
                (a.get(i, j) - predicted(i, j)).norm() <= tol
            }
        })
    });

    Ok(EqualityCertificate {
        c: Some([c.re, c.im]),
        partition,
        x: x.clone(),
        r,
        condition_i,
        condition_ii,
        condition_iii,
        overall: condition_i && condition_ii && condition_iii,
        eta_sq,
        bound,
        numeric_equality,
    })
}

/// Connected components of `deviates` restricted to the support; labels start at 1.
fn infer_classes(n: usize, support: &[bool], deviates: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut labels = vec![0; n];
    let mut next = 0;
    for start in 0..n {
        if !support[start] || labels[start] != 0 {
            continue;
        }
        next += 1;
        labels[start] = next;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if support[v] && labels[v] == 0 && deviates(u.min(v), u.max(v)) {
                    labels[v] = next;
                    stack.push(v);
                }
            }
        }
    }
    labels
}
