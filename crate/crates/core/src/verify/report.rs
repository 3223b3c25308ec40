//! Bound reports and their CSV / JSON encodings.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// A report holds when `slack ≥ −HOLDS_TOL`.
pub const HOLDS_TOL: f64 = 1e-8;

/// Exact CSV header.
pub const CSV_HEADER: &str = "bound_id,n,omega,frob_sq,lhs,rhs,slack,holds,degenerate,seed,trial";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundId {
    /// `η² ≤ (1 − 1/ω)‖A‖²` for Hermitian zero-diagonal `A`.
    Theorem1,
    /// `η² ≤ (1 − 1/(2ω) − 1/(2n))‖A‖²` for zero-diagonal `A`.
    Theorem2,
    /// `max_{x∈P_n} ⟨Ax,x⟩ ≤ 1 − 1/(2ω) − 1/(2n)` for 0/1 zero-diagonal `A`.
    Lemma1,
    /// `m ≤ (1 − 1/ω) n²/2` for graphs.
    Turan,
    /// `max_{x∈P_n} ⟨Ax,x⟩ ≤ 1 − 1/ω` for graphs.
    Ms,
}

impl BoundId {
    pub fn name(self) -> &'static str {
        match self {
            BoundId::Theorem1 => "theorem1",
            BoundId::Theorem2 => "theorem2",
            BoundId::Lemma1 => "lemma1",
            BoundId::Turan => "turan",
            BoundId::Ms => "ms",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem1" => BoundId::Theorem1,
            "theorem2" => BoundId::Theorem2,
            "lemma1" => BoundId::Lemma1,
            "turan" => BoundId::Turan,
            "ms" => BoundId::Ms,
            other => return Err(Error::InvalidParameter(format!("unknown bound '{other}'"))),
        })
    }
}

/// One checked inequality instance `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub n: usize,
    pub omega: usize,
    pub frob_sq: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub degenerate: bool,
    pub seed: Option<u64>,
    pub trial: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<[f64; 2]>>,
}

impl BoundReport {
    pub fn new(bound_id: BoundId, n: usize, omega: usize, frob_sq: f64, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        BoundReport {
            bound_id,
            n,
            omega,
            frob_sq,
            lhs,
            rhs,
            slack,
            holds: slack >= -HOLDS_TOL,
            degenerate: omega == 1,
            seed: None,
            trial: None,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Vec<[f64; 2]>) -> Self {
        self.witness = Some(witness);
        self
    }
}

/// A violated report together with the offending matrix.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub report: BoundReport,
    pub matrix: ComplexMatrix,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match serde_json::to_string(self) {
            Ok(text) => f.write_str(&text),
            Err(_) => write!(f, "{:?}", self),
        }
    }
}

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros removed.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_fraction(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_fraction(mantissa.to_string()), exp)
    }
}

fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn opt_field<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes reports as CSV with [`CSV_HEADER`]; floats use 17 significant digits.
pub fn write_csv<W: Write>(writer: W, reports: &[BoundReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(CSV_HEADER.split(','))?;
    for r in reports {
        w.write_record([
            r.bound_id.name().to_string(),
            r.n.to_string(),
            r.omega.to_string(),
            format_g17(r.frob_sq),
            format_g17(r.lhs),
            format_g17(r.rhs),
            format_g17(r.slack),
            r.holds.to_string(),
            r.degenerate.to_string(),
            opt_field(r.seed),
            opt_field(r.trial),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(reader: R) -> Result<Vec<BoundReport>> {
    let mut rdr = csv::Reader::from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::InvalidParameter(format!(
            "unexpected CSV header '{}'",
            header.join(",")
        )));
    }
    rdr.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn to_json(reports: &[BoundReport]) -> Result<String> {
    Ok(serde_json::to_string_pretty(reports)?)
}

pub fn from_json(text: &str) -> Result<Vec<BoundReport>> {
    Ok(serde_json::from_str(text)?)
}
