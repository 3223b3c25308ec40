//! Numerical radius, zero-pattern clique number and Frobenius norm of complex
//! square matrices, together with checkers and extremal constructions for the
//! sharp inequalities that relate them.
//!
//! * [`matrix`]: dense complex matrices, quadratic forms, predicates.
//! * [`pattern`]: the bidirectional zero-pattern graph and `ω(A)`.
//! * [`numradius`]: `η(A)` with a maximizing witness.
//! * [`motzkin`]: quadratic forms of 0/1 matrices over the probability simplex.
//! * [`extremal`]: instances attaining the bounds and the equality certifier.
//! * [`verify`]: bound checks, random ensembles, sweeps and reports.

pub mod eigen;
pub mod error;
pub mod extremal;
pub mod matrix;
pub mod motzkin;
pub mod numradius;
pub mod pattern;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, SimplexVector, UnitVector};
pub use num_complex::Complex64;
pub use numradius::{numerical_radius, RadiusResult};
pub use pattern::{extract_pattern, omega_exact, PatternGraph};
