//! Seeded random matrix ensembles. Trial `k` of a spec is generated from its
//! own ChaCha substream, so it does not depend on which other trials run or in
//! what order.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::pattern::{omega_exact, PatternGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnsembleKind {
    /// Complex Gaussian entries, Hermitian-symmetrized, zero diagonal.
    HermitianGaussian,
    /// Independent complex Gaussian entries, zero diagonal.
    ComplexGaussian,
    /// Each ordered off-diagonal entry is 1 with probability `density`.
    ZeroOneRandom,
    /// Graph adjacency with a planted clique of size `forced_omega` and `ω` held there.
    PatternPlanted,
}

impl EnsembleKind {
    pub fn name(self) -> &'static str {
        match self {
            EnsembleKind::HermitianGaussian => "hermitian_gaussian",
            EnsembleKind::ComplexGaussian => "complex_gaussian",
            EnsembleKind::ZeroOneRandom => "zero_one_random",
            EnsembleKind::PatternPlanted => "pattern_planted",
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hermitian_gaussian" => EnsembleKind::HermitianGaussian,
            "complex_gaussian" => EnsembleKind::ComplexGaussian,
            "zero_one_random" => EnsembleKind::ZeroOneRandom,
            "pattern_planted" => EnsembleKind::PatternPlanted,
            other => return Err(Error::InvalidParameter(format!("unknown ensemble '{other}'"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    /// Probability that an off-diagonal position is nonzero. For the Gaussian
    /// kinds it masks pairs (Hermitian) or entries (complex); 1.0 gives dense matrices.
    pub density: f64,
    pub forced_omega: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, n: usize, density: f64, trials: usize, seed: u64) -> Self {
        EnsembleSpec {
            kind,
            n,
            density,
            forced_omega: None,
            trials,
            seed,
        }
    }

    pub fn with_omega(mut self, omega: usize) -> Self {
        self.forced_omega = Some(omega);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(format!(
                "ensemble order must be >= 2, got {}",
                self.n
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidParameter(format!(
                "density {} outside [0, 1]",
                self.density
            )));
        }
        if self.kind == EnsembleKind::PatternPlanted {
            match self.forced_omega {
                None => {
                    return Err(Error::InvalidParameter(
                        "pattern_planted needs a target clique number".into(),
                    ))
                }
                Some(w) if w == 0 || w > self.n => {
                    return Err(Error::InvalidParameter(format!(
                        "forced omega {w} is infeasible for n = {}",
                        self.n
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

/// Generator for substream `stream` of `seed`.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Matrix number `trial` of the ensemble.
pub fn generate_trial(spec: &EnsembleSpec, trial: usize) -> Result<ComplexMatrix> {
    spec.validate()?;
    let mut rng = substream(spec.seed, trial as u64);
    let n = spec.n;
    let zero = Complex64::new(0.0, 0.0);
    let mut a = ComplexMatrix::zeros(n);
    match spec.kind {
        EnsembleKind::HermitianGaussian => {
            for i in 0..n {
                for j in i + 1..n {
                    let keep = rng.random::<f64>() < spec.density;
                    let g_ij = complex_normal(&mut rng);
                    let g_ji = complex_normal(&mut rng);
                    let z = if keep { (g_ij + g_ji.conj()) * 0.5 } else { zero };
                    a.set(i, j, z);
                    a.set(j, i, z.conj());
                }
            }
        }
        EnsembleKind::ComplexGaussian => {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let keep = rng.random::<f64>() < spec.density;
                    let g = complex_normal(&mut rng);
                    a.set(i, j, if keep { g } else { zero });
                }
            }
        }
        EnsembleKind::ZeroOneRandom => {
            for i in 0..n {
                for j in 0..n {
                    if i != j && rng.random::<f64>() < spec.density {
                        a.set(i, j, Complex64::new(1.0, 0.0));
                    }
                }
            }
        }
        EnsembleKind::PatternPlanted => {
            let target = spec.forced_omega.expect("validated");
            a = planted(&mut rng, n, target, spec.density).to_matrix();
        }
    }
    Ok(a)
}

/// Plants a clique of size `target` on random vertices, then offers the other
/// pairs in random order, each with probability `density`, keeping an edge
/// only if the clique number stays at `target`.
fn planted(rng: &mut ChaCha8Rng, n: usize, target: usize, density: f64) -> PatternGraph {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let clique = &vertices[..target];
    let mut g = PatternGraph::edgeless(n);
    for (k, &u) in clique.iter().enumerate() {
        for &v in &clique[k + 1..] {
            g.add_edge(u, v);
        }
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect();
    candidates.shuffle(rng);
    for (i, j) in candidates {
        if rng.random::<f64>() >= density {
            continue;
        }
        g.add_edge(i, j);
        if omega_exact(&g) > target {
            g.remove_edge(i, j);
        }
    }
    assert_eq!(omega_exact(&g), target, "planted clique number drifted");
    g
}

/// All trials of the ensemble, in trial order.
pub fn generate_ensemble(spec: &EnsembleSpec) -> Result<Vec<ComplexMatrix>> {
    spec.validate()?;
    (0..spec.trials)
        .into_par_iter()
        .map(|k| generate_trial(spec, k))
        .collect()
}
