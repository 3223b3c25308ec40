use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use numrad_core::extremal::{clique_plus_isolated, proposition_matrix, turan_adjacency, turan_partite_filled};
use numrad_core::motzkin::{general_simplex_max, DEFAULT_RESTARTS};
use numrad_core::verify::{check, sweep, write_csv, BoundId, EnsembleKind, EnsembleSpec};
use numrad_core::{extract_pattern, numerical_radius, omega_exact, Complex64, ComplexMatrix, Error, UnitVector};

/// Numerical radius, zero-pattern clique number and simplex bounds of complex matrices.
///
/// Matrix files are JSON: {"n": <int>, "entries": [[re, im], ...]} with n² row-major pairs.
#[derive(Parser)]
#[command(name = "numrad", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the numerical radius, maximizing phase and witness.
    Radius { file: PathBuf },
    /// Print the clique number of the bidirectional zero pattern.
    Omega {
        file: PathBuf,
        /// Entries with modulus at most this count as zero.
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
    /// Check one inequality; exit 0 if it holds, 1 if violated.
    Check {
        file: PathBuf,
        #[arg(long)]
        bound: BoundId,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write an extremal matrix.
    Extremal {
        #[arg(long, value_enum)]
        kind: ExtremalKind,
        #[arg(short = 'n', long = "n")]
        n: Option<usize>,
        #[arg(short = 'r', long = "r")]
        r: Option<usize>,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// proposition: comma-separated class labels, 0 for the zero block.
        #[arg(long)]
        labels: Option<String>,
        /// proposition: JSON array of [re, im] pairs, normalized before use.
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        c_re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        c_im: f64,
    },
    /// Maximize ⟨Ax, x⟩ over the simplex for a 0/1 zero-diagonal matrix.
    Ms {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a bound on a seeded random ensemble and write a CSV report.
    Sweep {
        #[arg(long)]
        ensemble: EnsembleKind,
        #[arg(short = 'n', long = "n")]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        /// Planted clique number (pattern_planted only).
        #[arg(long)]
        omega: Option<usize>,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        bound: BoundId,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        /// CSV output; standard output if omitted (the summary then goes to standard error).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremalKind {
    /// Balanced r-partite graph with the upper triangle of each class filled.
    Partite,
    /// Balanced complete r-partite graph.
    Turan,
    /// K_r on the first r vertices plus isolated vertices.
    Clique,
    /// Equality configuration from --labels, --x and --c-re/--c-im.
    Proposition,
}

/// A failure that maps to exit status 1 rather than 2.
struct Violation;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Violation)) => ExitCode::from(1),
        Err(err) => {
            if let Some(Error::Counterexample(ce)) = err.downcast_ref::<Error>() {
                eprintln!("counterexample: {ce}");
                return ExitCode::from(1);
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_matrix(path: &Path) -> anyhow::Result<ComplexMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(command: Command) -> anyhow::Result<Option<Violation>> {
    match command {
        Command::Radius { file } => {
            let a = read_matrix(&file)?;
            print_json(&numerical_radius(&a))?;
        }
        Command::Omega { file, tol } => {
            let a = read_matrix(&file)?;
            if tol.is_nan() || tol < 0.0 {
                bail!("tolerance must be nonnegative");
            }
            let omega = omega_exact(&extract_pattern(&a, tol));
            print_json(&json!({ "n": a.n(), "omega": omega }))?;
        }
        Command::Check {
            file,
            bound,
            restarts,
            seed,
        } => {
            let a = read_matrix(&file)?;
            let report = check(bound, &a, restarts, seed)?;
            print_json(&report)?;
            if !report.holds {
                return Ok(Some(Violation));
            }
        }
        Command::Extremal {
            kind,
            n,
            r,
            out,
            labels,
            x,
            c_re,
            c_im,
        } => {
            let a = match kind {
                ExtremalKind::Partite => turan_partite_filled(require(n, "-n")?, require(r, "-r")?)?,
                ExtremalKind::Turan => turan_adjacency(require(n, "-n")?, require(r, "-r")?)?,
                ExtremalKind::Clique => clique_plus_isolated(require(n, "-n")?, require(r, "-r")?)?,
                ExtremalKind::Proposition => {
                    let labels = parse_labels(&require(labels, "--labels")?)?;
                    let pairs: Vec<[f64; 2]> = serde_json::from_str(&require(x, "--x")?).context("parsing --x")?;
                    let x = UnitVector::normalize(pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect())?;
                    proposition_matrix(&labels, &x, Complex64::new(c_re, c_im))?
                }
            };
            let text = serde_json::to_string(&a)?;
            match out {
                Some(path) => fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
                None => println!("{text}"),
            }
        }
        Command::Ms { file, restarts, seed } => {
            let a = read_matrix(&file)?;
            print_json(&general_simplex_max(&a, restarts, seed)?)?;
        }
        Command::Sweep {
            ensemble,
            n,
            density,
            omega,
            trials,
            seed,
            bound,
            restarts,
            out,
        } => {
            let spec = EnsembleSpec {
                kind: ensemble,
                n,
                density,
                forced_omega: omega,
                trials,
                seed,
            };
            let outcome = sweep(&spec, bound, restarts)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    write_csv(io::BufWriter::new(file), &outcome.reports)?;
                    print_json(&outcome.summary)?;
                }
                None => {
                    write_csv(io::stdout().lock(), &outcome.reports)?;
                    eprintln!("{}", serde_json::to_string(&outcome.summary)?);
                }
            }
        }
    }
    Ok(None)
}

fn require<T>(value: Option<T>, flag: &str) -> anyhow::Result<T> {
    value.with_context(|| format!("{flag} is required for this kind"))
}

fn parse_labels(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad label '{s}'")))
        .collect()
}
