//! The per-check record and its three serialisations.

use std::fmt::Write as _;
use std::io;

use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Ordered `name -> value` pairs; serialised as a JSON object in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(pub Vec<(String, String)>);

impl Params {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    /// `k=v;k=v`, used by the CSV and text renderers.
    pub fn joined(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// Either a measured relative error or the marker for an exact comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RelError {
    Exact,
    Value(f64),
}

impl RelError {
    fn render(&self) -> String {
        match self {
            RelError::Exact => "exact".into(),
            RelError::Value(x) => num(*x),
        }
    }
}

impl Serialize for RelError {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RelError::Exact => s.serialize_str("exact"),
            RelError::Value(x) => s.serialize_f64(*x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: Params,
    pub lhs: String,
    pub rhs: String,
    pub abs_error: f64,
    pub rel_error: RelError,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
    pub pass: bool,
    pub runtime_ms: u64,
}

pub const FIELDS: [&str; 9] =
    ["identity_id", "parameters", "lhs", "rhs", "abs_error", "rel_error", "tail_bound", "pass", "runtime_ms"];

impl VerificationReport {
    /// Result of comparing two exact objects by their rendering and equality.
    /// `gap` gives (absolute, relative) size of the difference when unequal.
    pub fn exact(id: &str, parameters: Params, lhs: String, rhs: String, equal: bool, gap: (f64, f64)) -> Self {
        let (abs_error, rel_error) = if equal { (0.0, RelError::Exact) } else { (gap.0, RelError::Value(gap.1)) };
        Self {
            identity_id: id.into(),
            parameters,
            lhs,
            rhs,
            abs_error,
            rel_error,
            tail_bound: None,
            pass: equal,
            runtime_ms: 0,
        }
    }

    /// Floating-point comparison: passes when `|lhs - rhs| <= tail + tol |rhs|`.
    pub fn numeric(id: &str, parameters: Params, lhs: Complex64, rhs: Complex64, tol: f64, tail: Option<f64>) -> Self {
        let abs_error = (lhs - rhs).norm();
        let rel = abs_error / rhs.norm();
        let allowed = tail.unwrap_or(0.0) + tol * rhs.norm();
        Self {
            identity_id: id.into(),
            parameters,
            lhs: complex(lhs),
            rhs: complex(rhs),
            abs_error,
            rel_error: RelError::Value(rel),
            tail_bound: tail,
            pass: abs_error <= allowed,
            runtime_ms: 0,
        }
    }

    /// A check that could not be evaluated. Always fails.
    pub fn error(id: &str, parameters: Params, msg: impl std::fmt::Display) -> Self {
        Self {
            identity_id: id.into(),
            parameters,
            lhs: format!("error: {msg}"),
            rhs: String::new(),
            abs_error: f64::NAN,
            rel_error: RelError::Value(f64::NAN),
            tail_bound: None,
            pass: false,
            runtime_ms: 0,
        }
    }
}

/// Shortest round-tripping decimal; deterministic across runs.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else {
        format!("{x:?}")
    }
}

pub fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        num(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", num(z.re), num(-z.im))
    } else {
        format!("{}+{}i", num(z.re), num(z.im))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn emit<W: io::Write>(reports: &[VerificationReport], format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports).map_err(io::Error::other)?;
            out.write_all(b"\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(FIELDS)?;
            for r in reports {
                w.write_record([
                    r.identity_id.clone(),
                    r.parameters.joined(),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    num(r.abs_error),
                    r.rel_error.render(),
                    r.tail_bound.map(num).unwrap_or_default(),
                    r.pass.to_string(),
                    r.runtime_ms.to_string(),
                ])?;
            }
            w.flush()
        }
        Format::Text => out.write_all(text(reports).as_bytes()),
    }
}

const TEXT_CELL: usize = 48;

fn clip(s: &str) -> String {
    if s.chars().count() <= TEXT_CELL {
        s.to_string()
    } else {
        let head: String = s.chars().take(TEXT_CELL - 3).collect();
        format!("{head}...")
    }
}

fn text(reports: &[VerificationReport]) -> String {
    let header = ["identity", "parameters", "lhs", "rhs", "abs_error", "rel_error", "tail_bound", "pass"];
    let rows: Vec<[String; 8]> = reports
        .iter()
        .map(|r| {
            [
                r.identity_id.clone(),
                clip(&r.parameters.joined()),
                clip(&r.lhs),
                clip(&r.rhs),
                format!("{:.3e}", r.abs_error),
                match r.rel_error {
                    RelError::Exact => "exact".into(),
                    RelError::Value(x) => format!("{x:.3e}"),
                },
                r.tail_bound.map(|t| format!("{t:.3e}")).unwrap_or_else(|| "-".into()),
                if r.pass { "PASS" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut s = String::new();
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(s, "{}", padded.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(s, "{} reports, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    s
}
