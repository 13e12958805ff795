//! Experiment registry. Every experiment returns one `ReportRecord` and
//! writes its artifacts below the output directory.

pub mod disk;
pub mod na;
pub mod suite;

use crate::config::{Experiment, RunConfig, Space};
use crate::report::{Artifacts, Cell, ReportRecord};
use drspec::{Error, Result};
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Artifact location and record label of one experiment run.
pub struct Ctx {
    root: PathBuf,
    artifacts: Artifacts,
    label: String,
}

impl Ctx {
    pub fn new(root: &Path, sub: Option<&str>, label: impl Into<String>) -> Result<Self> {
        let base = Artifacts::new(root)?;
        let artifacts = match sub {
            Some(s) => base.sub(s)?,
            None => base,
        };
        Ok(Self { root: root.to_path_buf(), artifacts, label: label.into() })
    }

    pub fn record(&self, cfg: &RunConfig) -> ReportRecord {
        let mut r = ReportRecord::new(self.label.clone());
        r.inputs = cfg.echo();
        r
    }

    /// Writes a CSV and returns its path relative to the output root.
    pub fn csv(&self, name: &str, schema: &str, header: &[&str], rows: &[Vec<Cell<'_>>]) -> Result<String> {
        let p = self.artifacts.write_csv(name, schema, header, rows)?;
        Ok(p.strip_prefix(&self.root).unwrap_or(&p).to_string_lossy().replace('\\', "/"))
    }
}

/// Maximum that propagates NaN.
pub(crate) fn finite_max<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

fn space_name(s: &Space) -> &'static str {
    match s {
        Space::Disk => "disk",
        Space::Na(_) => "na",
    }
}

/// Runs one experiment without timing or tolerance overrides.
fn dispatch(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    use Experiment::*;
    match (cfg.experiment, &cfg.space) {
        (Spherical, Space::Disk) => disk::spherical(cfg, ctx),
        (Spherical, Space::Na(_)) => na::spherical(cfg, ctx),
        (Project, Space::Disk) => disk::project(cfg, ctx),
        (Project, Space::Na(_)) => na::project(cfg, ctx),
        (Roundtrip, Space::Disk) => disk::roundtrip(cfg, ctx),
        (Roundtrip, Space::Na(_)) => na::roundtrip(cfg, ctx),
        (Plancherel, Space::Disk) => disk::plancherel(cfg, ctx),
        (Plancherel, Space::Na(_)) => na::plancherel(cfg, ctx),
        (L2Bound, Space::Na(_)) => na::l2_bound(cfg, ctx),
        (L2Bound, Space::Disk) => Err(Error::InvalidInput("l2-bound needs --space na".into())),
        (ResidueSum, Space::Disk) => disk::residue_sum(cfg, ctx),
        (ResidueSum, Space::Na(_)) => Err(Error::InvalidInput("residue-sum needs --space disk".into())),
        (PwEnvelope, Space::Disk) => disk::pw_envelope(cfg, ctx),
        (PwEnvelope, Space::Na(_)) => na::pw_envelope(cfg, ctx),
        (Koornwinder, _) => na::koornwinder(cfg, ctx),
        (VerifyAll, _) => Err(Error::InvalidInput("verify-all is not a single experiment".into())),
    }
}

/// Runs `cfg` as a timed record with tolerance overrides applied.
pub fn run_one(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let t0 = Instant::now();
    let mut rec = dispatch(cfg, ctx)?;
    rec.apply_tolerances(&cfg.tolerances);
    rec.wall_time_s = t0.elapsed().as_secs_f64();
    Ok(rec)
}

/// Runs the configured experiment, or the whole suite for `verify-all`.
pub fn run(cfg: &RunConfig) -> Result<Vec<ReportRecord>> {
    if cfg.experiment == Experiment::VerifyAll {
        return suite::verify_all(cfg);
    }
    let label = format!("{}/{}", cfg.experiment.name(), space_name(&cfg.space));
    let ctx = Ctx::new(&cfg.out, None, label)?;
    Ok(vec![run_one(cfg, &ctx)?])
}
