//! Dense complex matrices, the two feasible vector sets (unit sphere and
//! probability simplex), quadratic forms and structural predicates.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Tolerance on `Σ|x_i|² = 1` (unit vectors) and `Σx_i = 1` (simplex vectors).
pub const VECTOR_TOL: f64 = 1e-12;

/// Default structural tolerance for exact 0/1 inputs.
pub const EXACT_TOL: f64 = 0.0;

/// Default structural tolerance for floating-point pipelines.
pub const FLOAT_TOL: f64 = 1e-12;

/// Dense `n × n` complex matrix stored row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

/// On-disk shape: `{ "n": <int>, "entries": [[re, im], ...] }`, row-major.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    entries: Vec<[f64; 2]>,
}

impl TryFrom<MatrixRepr> for ComplexMatrix {
    type Error = Error;

    fn try_from(repr: MatrixRepr) -> Result<Self> {
        let entries = repr
            .entries
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        ComplexMatrix::new(repr.n, entries)
    }
}

impl From<ComplexMatrix> for MatrixRepr {
    fn from(m: ComplexMatrix) -> Self {
        MatrixRepr {
            n: m.n,
            entries: m.entries.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("order must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for order {}, found {}",
                n * n,
                n,
                entries.len()
            )));
        }
        if let Some(k) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidMatrix(format!(
                "entry ({}, {}) is not finite",
                k / n,
                k % n
            )));
        }
        Ok(ComplexMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        ComplexMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// Builds a matrix from `f(i, j)` (0-based). Panics if `n == 0` or an entry is not finite.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self::new(n, entries).expect("from_fn produced an invalid matrix")
    }

    /// Builds a real matrix from rows. Panics on ragged or empty input.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square matrix");
        Self::from_fn(n, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    /// Symmetric 0/1 adjacency matrix of the graph with the given edges.
    pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(n);
        for &(i, j) in edges {
            assert!(i != j && i < n && j < n, "invalid edge ({i}, {j})");
            m.set(i, j, Complex64::new(1.0, 0.0));
            m.set(j, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        assert!(value.re.is_finite() && value.im.is_finite(), "entries must be finite");
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Entrywise `cA`.
    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_fn(self.n, |i, j| c * self.get(i, j))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j)))
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// `y = A x`.
    pub fn mul_vec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_dim(x.len())?;
        Ok((0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, xj)| a * xj).sum())
            .collect())
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    /// The inner product `⟨Ax, x⟩ = Σ_{i,j} a_ij x_j conj(x_i)`.
    pub fn quadratic_form(&self, x: &[Complex64]) -> Result<Complex64> {
        self.check_dim(x.len())?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, xi) in x.iter().enumerate() {
            let row: Complex64 = self.row(i).iter().zip(x).map(|(a, xj)| a * xj).sum();
            acc += row * xi.conj();
        }
        Ok(acc)
    }

    /// `xᵀ A x` for a real vector; returns the real part.
    pub fn real_quadratic_form(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x.len())?;
        let mut acc = 0.0;
        for (i, xi) in x.iter().enumerate() {
            let row: f64 = self.row(i).iter().zip(x).map(|(a, xj)| a.re * xj).sum();
            acc += row * xi;
        }
        Ok(acc)
    }

    /// `Σ_{i,j} |a_ij|²`.
    pub fn frobenius_norm_sq(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sq().sqrt()
    }

    /// Number of unit entries of a 0/1 matrix; `None` when some entry is neither 0 nor 1.
    pub fn ones_count(&self) -> Option<u64> {
        let mut count = 0;
        for z in &self.entries {
            if *z == Complex64::new(1.0, 0.0) {
                count += 1;
            } else if *z != Complex64::new(0.0, 0.0) {
                return None;
            }
        }
        Some(count)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.n;
        (0..n).all(|i| (i..n).all(|j| (self.get(i, j) - self.get(j, i).conj()).norm() <= tol))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.n;
        (0..n).all(|i| (i + 1..n).all(|j| (self.get(i, j) - self.get(j, i)).norm() <= tol))
    }

    pub fn has_zero_diagonal(&self, tol: f64) -> bool {
        (0..self.n).all(|i| self.get(i, i).norm() <= tol)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// All entries exactly 0 or 1 and the diagonal is zero.
    pub fn is_zero_one_zero_diagonal(&self) -> bool {
        self.ones_count().is_some() && self.has_zero_diagonal(EXACT_TOL)
    }

    /// Symmetric 0/1 matrix with zero diagonal: the adjacency matrix of a simple graph.
    pub fn is_adjacency(&self) -> bool {
        self.is_zero_one_zero_diagonal() && self.is_symmetric(EXACT_TOL)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix (n = {})", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|z| {
                    if z.im == 0.0 {
                        format!("{}", z.re)
                    } else {
                        format!("{}{:+}i", z.re, z.im)
                    }
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A complex vector with Euclidean norm 1.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector(Vec<Complex64>);

impl UnitVector {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidVector("empty vector".into()));
        }
        let norm_sq: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > VECTOR_TOL {
            return Err(Error::InvalidVector(format!("squared norm {norm_sq} is not 1")));
        }
        Ok(UnitVector(coords))
    }

    /// Scales a nonzero vector to unit length.
    pub fn normalize(mut coords: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidVector("cannot normalize a zero vector".into()));
        }
        coords.iter_mut().for_each(|z| *z /= norm);
        Self::new(coords)
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Self::normalize(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        assert!(i < n, "basis index out of range");
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[i] = Complex64::new(1.0, 0.0);
        UnitVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }

    /// `[[re, im], ...]` pairs, the serialized form of witnesses.
    pub fn to_pairs(&self) -> Vec<[f64; 2]> {
        self.0.iter().map(|z| [z.re, z.im]).collect()
    }
}

impl Serialize for UnitVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

/// A point of the standard simplex: nonnegative coordinates summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexVector(Vec<f64>);

impl SimplexVector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidVector("empty vector".into()));
        }
        if let Some(x) = coords.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::InvalidVector(format!(
                "coordinate {x} is not a finite nonnegative number"
            )));
        }
        let sum: f64 = coords.iter().sum();
        if (sum - 1.0).abs() > VECTOR_TOL {
            return Err(Error::InvalidVector(format!("coordinates sum to {sum}, not 1")));
        }
        Ok(SimplexVector(coords))
    }

    /// Rescales nonnegative weights with positive total onto the simplex.
    pub fn from_weights(mut weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !total.is_finite() || total <= 0.0 {
            return Err(Error::InvalidVector("weights must have a positive finite total".into()));
        }
        weights.iter_mut().for_each(|w| *w /= total);
        Self::new(weights)
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1);
        SimplexVector(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.0.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }
}

impl Serialize for SimplexVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}
