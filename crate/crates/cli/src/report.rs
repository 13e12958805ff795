//! Report records, metrics and deterministic CSV artifacts.

use drspec::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// value ≤ tolerance
    AtMost,
    /// value ≥ tolerance
    AtLeast,
    /// value is finite; tolerance unused
    Finite,
    /// reported only
    Diagnostic,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub bound: Bound,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Metric {
    fn build(name: impl Into<String>, value: f64, bound: Bound, tolerance: Option<f64>) -> Self {
        let mut m = Self { name: name.into(), value, bound, tolerance, pass: true };
        m.evaluate();
        m
    }

    pub fn at_most(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self::build(name, value, Bound::AtMost, Some(tol))
    }

    pub fn at_least(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self::build(name, value, Bound::AtLeast, Some(tol))
    }

    pub fn finite(name: impl Into<String>, value: f64) -> Self {
        Self::build(name, value, Bound::Finite, None)
    }

    pub fn diagnostic(name: impl Into<String>, value: f64) -> Self {
        Self::build(name, value, Bound::Diagnostic, None)
    }

    /// Name up to the first `[`, the key for `--tol-<metric>` overrides.
    pub fn base_name(&self) -> &str {
        self.name.split('[').next().unwrap_or(&self.name)
    }

    fn evaluate(&mut self) {
        self.pass = match (self.bound, self.tolerance) {
            (Bound::AtMost, Some(t)) => self.value <= t,
            (Bound::AtLeast, Some(t)) => self.value >= t,
            (Bound::Finite, _) => self.value.is_finite(),
            (Bound::Diagnostic, _) => true,
            (_, None) => false,
        };
    }

    pub fn override_tolerance(&mut self, tol: f64) {
        if matches!(self.bound, Bound::AtMost | Bound::AtLeast) {
            self.tolerance = Some(tol);
            self.evaluate();
        }
    }
}

/// Outcome of one experiment. Wall time is printed, never serialized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRecord {
    pub experiment: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub metrics: Vec<Metric>,
    pub pass: bool,
    pub artifacts: Vec<String>,
    #[serde(skip)]
    pub wall_time_s: f64,
}

impl ReportRecord {
    pub fn new(experiment: impl Into<String>) -> Self {
        Self {
            experiment: experiment.into(),
            inputs: BTreeMap::new(),
            metrics: Vec::new(),
            pass: true,
            artifacts: Vec::new(),
            wall_time_s: 0.0,
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.into(), serde_json::to_value(value).unwrap_or(serde_json::Value::Null));
        self
    }

    pub fn push(&mut self, m: Metric) {
        self.metrics.push(m);
    }

    pub fn apply_tolerances(&mut self, tols: &BTreeMap<String, f64>) {
        for m in &mut self.metrics {
            if let Some(&t) = tols.get(m.base_name()) {
                m.override_tolerance(t);
            }
        }
        self.pass = self.metrics.iter().all(|m| m.pass);
    }

    /// Human-readable lines for stdout.
    pub fn summary(&self) -> String {
        let mut s =
            format!("[{}] {} ({:.2} s)\n", if self.pass { "PASS" } else { "FAIL" }, self.experiment, self.wall_time_s);
        for m in &self.metrics {
            let rel = match (m.bound, m.tolerance) {
                (Bound::AtMost, Some(t)) => format!("<= {t:.3e}"),
                (Bound::AtLeast, Some(t)) => format!(">= {t:.3e}"),
                (Bound::Finite, _) => "finite".into(),
                _ => "diagnostic".into(),
            };
            s += &format!("    {} {} = {:.6e} ({rel})\n", if m.pass { "ok  " } else { "FAIL" }, m.name, m.value);
        }
        s
    }
}

/// Writes CSV files with a `#schema=` header line and 17-digit floats.
#[derive(Debug, Clone)]
pub struct Artifacts {
    dir: PathBuf,
}

#[derive(Debug, Clone, Copy)]
pub enum Cell<'a> {
    F(f64),
    I(i64),
    S(&'a str),
}

impl Cell<'_> {
    fn render(&self) -> String {
        match self {
            Cell::F(x) => format!("{x:.17e}"),
            Cell::I(i) => i.to_string(),
            Cell::S(s) => s.to_string(),
        }
    }
}

impl Artifacts {
    pub fn new(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self { dir: dir.to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn sub(&self, name: &str) -> Result<Self> {
        Self::new(&self.dir.join(name))
    }

    /// Writes `name` and returns its path relative to the artifact root.
    pub fn write_csv(&self, name: &str, schema: &str, header: &[&str], rows: &[Vec<Cell<'_>>]) -> Result<PathBuf> {
        let path = self.dir.join(name);
        let mut buf = format!("#schema={schema}\n").into_bytes();
        {
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(header)?;
            for row in rows {
                if row.len() != header.len() {
                    return Err(Error::DimensionMismatch { expected: header.len(), got: row.len() });
                }
                w.write_record(row.iter().map(Cell::render))?;
            }
            w.flush()?;
        }
        fs::write(&path, buf)?;
        Ok(path)
    }

    pub fn write_json(&self, name: &str, value: &impl Serialize) -> Result<PathBuf> {
        let path = self.dir.join(name);
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        fs::write(&path, s)?;
        Ok(path)
    }
}
