//! Command-line surface and the resolved run configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use drspec::disk_spectral::SO2FiniteFunction;
use drspec::na::NAParams;
use drspec::numerics::{range_inclusive, ComplexGrid};
use drspec::profile::RadialProfile;
use drspec::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fs::File;
use std::path::PathBuf;

/// Environment variable overriding the worker-pool size.
pub const THREADS_ENV: &str = "DRSPEC_THREADS";

#[derive(Debug, Parser)]
#[command(name = "drspec", version, about = "Spectral projection experiments on the disk and on Damek-Ricci spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate spherical functions.
    Spherical(CommonArgs),
    /// Spectral projection sweep with cross-checks.
    Project(CommonArgs),
    /// Inversion of the projection family.
    Roundtrip(CommonArgs),
    /// Plancherel identity after calibration.
    Plancherel(CommonArgs),
    /// Weighted L² bound for radial projections.
    L2Bound(CommonArgs),
    /// Residue sums of the meromorphic projection.
    ResidueSum(CommonArgs),
    /// Paley-Wiener envelope certificates.
    PwEnvelope(CommonArgs),
    /// Koornwinder growth certificate for Jacobi functions.
    Koornwinder(CommonArgs),
    /// Every registered check.
    VerifyAll(CommonArgs),
}

impl Command {
    pub fn split(self) -> (Experiment, CommonArgs) {
        match self {
            Command::Spherical(a) => (Experiment::Spherical, a),
            Command::Project(a) => (Experiment::Project, a),
            Command::Roundtrip(a) => (Experiment::Roundtrip, a),
            Command::Plancherel(a) => (Experiment::Plancherel, a),
            Command::L2Bound(a) => (Experiment::L2Bound, a),
            Command::ResidueSum(a) => (Experiment::ResidueSum, a),
            Command::PwEnvelope(a) => (Experiment::PwEnvelope, a),
            Command::Koornwinder(a) => (Experiment::Koornwinder, a),
            Command::VerifyAll(a) => (Experiment::VerifyAll, a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceArg {
    Disk,
    Na,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value = "disk")]
    pub space: SpaceArg,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Angular mode; each experiment has its own default set.
    #[arg(long, allow_hyphen_values = true)]
    pub mode: Option<i32>,
    /// Support radius of the bump profile.
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Radial profile CSV (`rho,value`) replacing the bump.
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// SO(2)-finite disk function as JSON, replacing the bump.
    #[arg(long)]
    pub function: Option<PathBuf>,
    /// Single real spectral parameter; shorthand for equal min and max.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_max: Option<f64>,
    #[arg(long)]
    pub lambda_step: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub im_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub im_max: Option<f64>,
    #[arg(long)]
    pub im_step: Option<f64>,
    /// Evaluation radius (geodesic).
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long, default_value = "drspec-out")]
    pub out: PathBuf,
    /// Tolerance override `metric=value`; also spelled `--tol-<metric> <value>`.
    #[arg(long = "tol", value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    #[arg(long)]
    pub threads: Option<usize>,
}

fn parse_tol(s: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected metric=value, got `{s}`"))?;
    let v: f64 = v.parse().map_err(|e| format!("bad tolerance `{v}`: {e}"))?;
    if k.is_empty() || !(v >= 0.0) {
        return Err(format!("bad tolerance override `{s}`"));
    }
    Ok((k.to_string(), v))
}

/// Rewrites `--tol-<metric> v` and `--tol-<metric>=v` into `--tol <metric>=v`.
pub fn normalize_args<I: IntoIterator<Item = String>>(args: I) -> Vec<String> {
    let mut out = Vec::new();
    let mut it = args.into_iter().peekable();
    while let Some(a) = it.next() {
        match a.strip_prefix("--tol-") {
            Some(rest) if !rest.is_empty() => {
                out.push("--tol".into());
                if rest.contains('=') {
                    out.push(rest.to_string());
                } else {
                    let v = it.next().unwrap_or_default();
                    out.push(format!("{rest}={v}"));
                }
            }
            _ => out.push(a),
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Spherical,
    Project,
    Roundtrip,
    Plancherel,
    L2Bound,
    ResidueSum,
    PwEnvelope,
    Koornwinder,
    VerifyAll,
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Spherical => "spherical",
            Self::Project => "project",
            Self::Roundtrip => "roundtrip",
            Self::Plancherel => "plancherel",
            Self::L2Bound => "l2-bound",
            Self::ResidueSum => "residue-sum",
            Self::PwEnvelope => "pw-envelope",
            Self::Koornwinder => "koornwinder",
            Self::VerifyAll => "verify-all",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Space {
    Disk,
    Na(NAParams),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ProfileSpec {
    Bump { radius: f64 },
    Csv(PathBuf),
    Json(PathBuf),
}

/// Spectral grid as given; `None` fields take experiment defaults.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct LambdaSpec {
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub step: Option<f64>,
    pub im_min: Option<f64>,
    pub im_max: Option<f64>,
    pub im_step: Option<f64>,
}

impl LambdaSpec {
    /// Real axis points with defaults (min, max, step).
    pub fn real_points(&self, default: (f64, f64, f64)) -> Result<Vec<f64>> {
        range_inclusive(self.min.unwrap_or(default.0), self.max.unwrap_or(default.1), self.step.unwrap_or(default.2))
    }

    pub fn complex_grid(&self, re: (f64, f64, f64), im: (f64, f64, f64)) -> Result<ComplexGrid> {
        ComplexGrid::new(
            self.real_points(re)?,
            range_inclusive(self.im_min.unwrap_or(im.0), self.im_max.unwrap_or(im.1), self.im_step.unwrap_or(im.2))?,
        )
    }

    /// Upper truncation Λ of line integrals.
    pub fn cutoff(&self, default: f64) -> f64 {
        self.max.unwrap_or(default)
    }

    pub fn has_imaginary(&self) -> bool {
        self.im_min.is_some() || self.im_max.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub space: Space,
    pub experiment: Experiment,
    pub profile: ProfileSpec,
    pub mode: Option<i32>,
    pub lambda: LambdaSpec,
    pub rho: Option<f64>,
    pub out: PathBuf,
    pub tolerances: BTreeMap<String, f64>,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn from_args(experiment: Experiment, a: CommonArgs) -> Result<Self> {
        let space = match a.space {
            SpaceArg::Disk => Space::Disk,
            SpaceArg::Na => Space::Na(NAParams::new(a.m, a.k)?),
        };
        if !(a.radius > 0.0) || !a.radius.is_finite() {
            return Err(Error::InvalidInput(format!("--R must be positive, got {}", a.radius)));
        }
        let profile = match (&a.profile, &a.function) {
            (Some(_), Some(_)) => return Err(Error::InvalidInput("--profile and --function are exclusive".into())),
            (Some(p), None) => ProfileSpec::Csv(p.clone()),
            (None, Some(p)) => {
                if space != Space::Disk {
                    return Err(Error::InvalidInput("--function describes a disk function".into()));
                }
                ProfileSpec::Json(p.clone())
            }
            (None, None) => ProfileSpec::Bump { radius: a.radius },
        };
        let mut lambda = LambdaSpec {
            min: a.lambda_min,
            max: a.lambda_max,
            step: a.lambda_step,
            im_min: a.im_min,
            im_max: a.im_max,
            im_step: a.im_step,
        };
        if let Some(l) = a.lambda {
            if a.lambda_min.is_some() || a.lambda_max.is_some() {
                return Err(Error::InvalidInput("--lambda excludes --lambda-min/--lambda-max".into()));
            }
            lambda.min = Some(l);
            lambda.max = Some(l);
            lambda.step = Some(1.0);
        }
        if let Some(r) = a.rho {
            if !(r >= 0.0) || !r.is_finite() {
                return Err(Error::InvalidInput(format!("--rho must be non-negative, got {r}")));
            }
        }
        let threads = match a.threads {
            Some(t) => Some(t),
            None => match std::env::var(THREADS_ENV) {
                Ok(v) => Some(v.parse().map_err(|_| Error::InvalidInput(format!("{THREADS_ENV}={v} is not a count")))?),
                Err(_) => None,
            },
        };
        if threads == Some(0) {
            return Err(Error::InvalidInput("thread count must be positive".into()));
        }
        Ok(Self {
            space,
            experiment,
            profile,
            mode: a.mode,
            lambda,
            rho: a.rho,
            out: a.out,
            tolerances: a.tol.into_iter().collect(),
            threads,
        })
    }

    /// Configuration with every default, as used by the acceptance suite.
    pub fn defaults(experiment: Experiment, space: Space, out: PathBuf) -> Self {
        Self {
            space,
            experiment,
            profile: ProfileSpec::Bump { radius: 1.0 },
            mode: None,
            lambda: LambdaSpec::default(),
            rho: None,
            out,
            tolerances: BTreeMap::new(),
            threads: None,
        }
    }

    pub fn na_params(&self) -> Result<NAParams> {
        match self.space {
            Space::Na(p) => Ok(p),
            Space::Disk => Err(Error::InvalidInput(format!("{} needs --space na", self.experiment.name()))),
        }
    }

    pub fn radius(&self) -> Result<f64> {
        match &self.profile {
            ProfileSpec::Bump { radius } => Ok(*radius),
            _ => Ok(self.radial_profile()?.support_radius()),
        }
    }

    /// Radial profile for NA experiments.
    pub fn radial_profile(&self) -> Result<RadialProfile> {
        match &self.profile {
            ProfileSpec::Bump { radius } => RadialProfile::bump(*radius),
            ProfileSpec::Csv(p) => RadialProfile::read_csv(File::open(p)?),
            ProfileSpec::Json(_) => Err(Error::InvalidInput("JSON functions live on the disk".into())),
        }
    }

    /// Disk function for mode `n`: bump tanh^{|n|}·f_R, a CSV profile, or the
    /// JSON function itself.
    pub fn disk_function(&self, n: i32) -> Result<SO2FiniteFunction> {
        use drspec::disk_spectral::ModeProfile;
        match &self.profile {
            ProfileSpec::Bump { radius } => SO2FiniteFunction::bump_mode(n, *radius),
            ProfileSpec::Csv(p) => {
                let prof = RadialProfile::read_csv(File::open(p)?)?;
                let r = prof.support_radius();
                SO2FiniteFunction::new(
                    BTreeMap::from([(n, ModeProfile::real(prof))]),
                    r,
                    num_complex::Complex64::new(0.0, 0.0),
                )
            }
            ProfileSpec::Json(p) => SO2FiniteFunction::read_json(File::open(p)?),
        }
    }

    /// Modes: the `--mode` value, the modes of a JSON function, or `default`.
    pub fn modes(&self, default: &[i32]) -> Result<Vec<i32>> {
        if let Some(m) = self.mode {
            return Ok(vec![m]);
        }
        if let ProfileSpec::Json(_) = self.profile {
            return Ok(self.disk_function(0)?.modes().keys().copied().collect());
        }
        Ok(default.to_vec())
    }

    pub fn echo(&self) -> BTreeMap<String, serde_json::Value> {
        let mut m = BTreeMap::new();
        let space = match self.space {
            Space::Disk => serde_json::json!("disk"),
            Space::Na(p) => serde_json::json!({"na": {"m": p.m(), "k": p.k()}}),
        };
        m.insert("space".into(), space);
        m.insert("profile".into(), serde_json::to_value(&self.profile).unwrap_or_default());
        m.insert("mode".into(), serde_json::to_value(self.mode).unwrap_or_default());
        m.insert("lambda".into(), serde_json::to_value(&self.lambda).unwrap_or_default());
        m.insert("rho".into(), serde_json::to_value(self.rho).unwrap_or_default());
        if !self.tolerances.is_empty() {
            m.insert("tolerances".into(), serde_json::to_value(&self.tolerances).unwrap_or_default());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tol_flags_rewritten() {
        let a = normalize_args(["x", "--tol-rel-error", "1e-3", "--tol-gap=2", "--out", "o"].map(String::from));
        assert_eq!(a, ["x", "--tol", "rel-error=1e-3", "--tol", "gap=2", "--out", "o"]);
        assert!(parse_tol("a=-1").is_err());
        assert_eq!(parse_tol("a=0.5").unwrap(), ("a".to_string(), 0.5));
    }

    #[test]
    fn lambda_shorthand() {
        let cli = Cli::try_parse_from(normalize_args(
            ["drspec", "project", "--space", "disk", "--mode", "0", "--lambda", "0"].map(String::from),
        ))
        .unwrap();
        let (e, a) = cli.command.split();
        let c = RunConfig::from_args(e, a).unwrap();
        assert_eq!(c.lambda.real_points((0.5, 8.0, 0.5)).unwrap(), vec![0.0]);
        assert_eq!(c.modes(&[1, 2]).unwrap(), vec![0]);
    }

    #[test]
    fn invalid_inputs_rejected() {
        let parse = |v: &[&str]| {
            let cli = Cli::try_parse_from(v.iter().map(|s| s.to_string()))?;
            let (e, a) = cli.command.split();
            Ok::<_, Box<dyn std::error::Error>>(RunConfig::from_args(e, a)?)
        };
        assert!(parse(&["drspec", "spherical", "--space", "na", "--m", "3"]).is_err());
        assert!(parse(&["drspec", "spherical", "--R", "-1"]).is_err());
        assert!(parse(&["drspec", "bogus"]).is_err());
        assert!(parse(&["drspec", "spherical", "--space", "na"]).is_ok());
    }
}
