//! The acceptance suite: every registered check in a fixed order, with
//! artifacts in one subdirectory per check.

use super::{finite_max, run_one, Ctx};
use crate::config::{Experiment, RunConfig, Space};
use crate::report::{Cell, Metric, ReportRecord};
use drspec::disk::{
    disk_distance, laplacian_disk_apply, mobius_from_origin, mobius_to_origin, poisson_power_disk, to_polar,
    BoundaryPoint, DiskPoint, LaplacianForm,
};
use drspec::disk_spectral::{generalized_spherical, ClosedFormProjector, SO2FiniteFunction, SphericalForm};
use drspec::na::{
    geodesic_inversion, geodesic_rho, group_inv, group_mul, radial_drift, spherical_phi_na, HTypeStructure, NAParams,
    NAPoint,
};
use drspec::numerics::{laplacian_fd, observed_orders, range_inclusive, Geometry, StencilPoint};
use drspec::specfun::{c_inverse_square, jacobi_density, JacobiParams};
use drspec::{Complex64, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::time::Instant;

/// Stencil steps of the eigenresidual convergence test.
pub const STENCIL_STEPS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];
/// Sample count and seed of the geometry suite.
pub const GEOMETRY_SAMPLES: usize = 1000;
const GEOMETRY_SEED: u64 = 0x5eed_0011;

enum Check {
    Run(Experiment, Space),
    Eigen,
    Density,
    Geometry,
}

fn registry() -> Result<Vec<(u32, &'static str, Check)>> {
    use Experiment::*;
    let na = || -> Result<Space> { Ok(Space::Na(NAParams::new(2, 1)?)) };
    Ok(vec![
        (1, "spherical-disk", Check::Run(Spherical, Space::Disk)),
        (2, "project-disk", Check::Run(Project, Space::Disk)),
        (3, "eigen", Check::Eigen),
        (4, "roundtrip-disk", Check::Run(Roundtrip, Space::Disk)),
        (5, "residue-sum-disk", Check::Run(ResidueSum, Space::Disk)),
        (6, "pw-envelope-disk", Check::Run(PwEnvelope, Space::Disk)),
        (6, "pw-envelope-na", Check::Run(PwEnvelope, na()?)),
        (7, "plancherel-disk", Check::Run(Plancherel, Space::Disk)),
        (7, "plancherel-na", Check::Run(Plancherel, na()?)),
        (8, "l2-bound-na", Check::Run(L2Bound, na()?)),
        (9, "density", Check::Density),
        (10, "koornwinder-na", Check::Run(Koornwinder, na()?)),
        (11, "geometry", Check::Geometry),
    ])
}

/// Runs every check with default settings; `cfg` contributes the output
/// directory and tolerance overrides. Writes `report.json` at the root.
pub fn verify_all(cfg: &RunConfig) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for (criterion, name, check) in registry()? {
        let sub = format!("c{criterion:02}-{name}");
        let ctx = Ctx::new(&cfg.out, Some(&sub), format!("{criterion}:{name}"))?;
        let rec = match check {
            Check::Run(exp, space) => {
                let mut c = RunConfig::defaults(exp, space, cfg.out.clone());
                c.tolerances = cfg.tolerances.clone();
                run_one(&c, &ctx)?
            }
            Check::Eigen => timed(cfg, &ctx, eigen)?,
            Check::Density => timed(cfg, &ctx, density)?,
            Check::Geometry => timed(cfg, &ctx, geometry)?,
        };
        println!("{}", rec.summary().trim_end());
        out.push(rec);
    }
    Ok(out)
}

fn timed(cfg: &RunConfig, ctx: &Ctx, f: fn(&RunConfig, &Ctx) -> Result<ReportRecord>) -> Result<ReportRecord> {
    let t0 = Instant::now();
    let mut rec = f(cfg, ctx)?;
    rec.inputs.retain(|k, _| k == "tolerances");
    rec.apply_tolerances(&cfg.tolerances);
    rec.wall_time_s = t0.elapsed().as_secs_f64();
    Ok(rec)
}

/// Minimum that propagates NaN.
fn min_nan(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.min(b)
    }
}

fn residuals<F: Fn(f64) -> Result<f64>>(f: F) -> Result<Vec<f64>> {
    STENCIL_STEPS.iter().map(|&h| f(h)).collect()
}

/// Eigenresidual convergence orders of the disk Poisson power, the
/// generalized spherical functions, a projection, and the NA spherical function.
pub fn eigen(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let mut rec = ctx.record(cfg);
    let mut rows = Vec::new();
    let record = |group: &str, case: String, res: Vec<f64>, rows: &mut Vec<Vec<String>>| -> f64 {
        for (h, r) in STENCIL_STEPS.iter().zip(&res) {
            rows.push(vec![group.to_string(), case.clone(), format!("{h:.17e}"), format!("{r:.17e}")]);
        }
        observed_orders(&res).into_iter().fold(f64::INFINITY, min_nan)
    };
    let lams = [Complex64::new(0.5, 0.0), Complex64::new(3.0, 0.0), Complex64::new(8.0, 0.0), Complex64::new(2.0, 0.5)];

    let mut poisson = f64::INFINITY;
    let w = BoundaryPoint::new(0.4);
    for &l in &lams {
        let field =
            |z: Complex64| poisson_power_disk(&DiskPoint::new(z).unwrap_or_else(|_| DiskPoint::origin()), &w, l);
        for (zr, zt) in [(0.3, 1.1), (0.8, 2.0)] {
            let z = Complex64::from_polar(zr, zt);
            let target = -(l * l + 1.0) * field(z);
            for form in [LaplacianForm::Cartesian, LaplacianForm::Polar] {
                let res = residuals(|h| Ok((laplacian_disk_apply(field, z, h, form)? - target).norm()))?;
                let o = record("disk-poisson", format!("lambda={l},z={z},{form:?}"), res, &mut rows);
                poisson = min_nan(poisson, o);
            }
        }
    }

    let mut sph = f64::INFINITY;
    for &l in &lams {
        for k in [0, 2, -3] {
            let field = |z: Complex64| {
                let (r, t) = to_polar(z).unwrap_or((0.0, 0.0));
                generalized_spherical(l, k, r, SphericalForm::Closed).unwrap_or(Complex64::new(f64::NAN, 0.0))
                    * Complex64::from_polar(1.0, k as f64 * t)
            };
            let z = Complex64::from_polar(0.6, 0.9);
            let target = -(l * l + 1.0) * field(z);
            let res =
                residuals(|h| Ok((laplacian_disk_apply(field, z, h, LaplacianForm::Cartesian)? - target).norm()))?;
            sph = min_nan(sph, record("disk-spherical", format!("lambda={l},k={k}"), res, &mut rows));
        }
    }

    let mut proj = f64::INFINITY;
    for n in [0, 1] {
        let f = SO2FiniteFunction::bump_mode(n, 1.0)?;
        let p = ClosedFormProjector::new(&f, n)?;
        for l in [Complex64::new(2.5, 0.0), Complex64::new(1.5, 0.7)] {
            let field =
                |z: Complex64| DiskPoint::new(z).and_then(|d| p.value(l, &d)).unwrap_or(Complex64::new(f64::NAN, 0.0));
            let z = Complex64::from_polar(0.4, 0.3);
            let target = -(l * l + 1.0) * field(z);
            let res =
                residuals(|h| Ok((laplacian_disk_apply(field, z, h, LaplacianForm::Cartesian)? - target).norm()))?;
            proj = min_nan(proj, record("disk-projection", format!("lambda={l},n={n}"), res, &mut rows));
        }
    }

    let mut na = f64::INFINITY;
    let p = NAParams::new(2, 1)?;
    let drift = |r: f64| radial_drift(&p, r);
    let g = Geometry::RadialWithDrift(&drift);
    for l in [0.5, 1.7, 5.0] {
        let l = Complex64::new(l, 0.0);
        let field = |s: StencilPoint| match s {
            StencilPoint::Radius(r) => spherical_phi_na(&p, l, r).unwrap_or(Complex64::new(f64::NAN, 0.0)),
            StencilPoint::Plane(_) => Complex64::new(f64::NAN, 0.0),
        };
        for at in [0.5, 1.3, 3.0] {
            let target = p.eigenvalue(l) * field(StencilPoint::Radius(at));
            let res = residuals(|h| Ok((laplacian_fd(field, StencilPoint::Radius(at), h, &g)? - target).norm()))?;
            na = min_nan(na, record("na-spherical", format!("lambda={l},rho={at}"), res, &mut rows));
        }
    }

    let cells: Vec<Vec<Cell>> = rows.iter().map(|r| r.iter().map(|s| Cell::S(s)).collect()).collect();
    rec.artifacts.push(ctx.csv("eigen.csv", "eigen/v1", &["group", "case", "h", "residual"], &cells)?);
    rec.push(Metric::at_least("min-order[disk-poisson]", poisson, 1.9));
    rec.push(Metric::at_least("min-order[disk-spherical]", sph, 1.9));
    rec.push(Metric::at_least("min-order[disk-projection]", proj, 1.9));
    rec.push(Metric::at_least("min-order[na-spherical]", na, 1.9));
    Ok(rec)
}

fn relative_std(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    var.sqrt() / mean.abs()
}

/// |c_{0,0}|^{-2} against λ tanh(πλ/2): the radial-parameter density at λ/2
/// (Jacobi parameter λ) is proportional; the Jacobi parameter 2λ is not.
pub fn density(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = JacobiParams::new(0.0, 0.0)?;
    let ls = range_inclusive(0.5, 10.0, 0.5)?;
    let mut rows = Vec::new();
    let (mut ratio, mut doubled) = (Vec::new(), Vec::new());
    for &l in &ls {
        let w = l * (PI * l / 2.0).tanh();
        let a = c_inverse_square(p, Complex64::new(l / 2.0, 0.0))?.re / w;
        let b = jacobi_density(p, Complex64::new(2.0 * l, 0.0))?.re / w;
        rows.push(vec![Cell::F(l), Cell::F(a), Cell::F(b)]);
        ratio.push(a);
        doubled.push(b);
    }
    let mut rec = ctx.record(cfg);
    rec.artifacts.push(ctx.csv("density.csv", "density/v1", &["lambda", "ratio", "ratio_doubled"], &rows)?);
    rec.push(Metric::at_most("relative-std", relative_std(&ratio), 1e-8));
    rec.push(Metric::diagnostic("relative-std-doubled", relative_std(&doubled)));
    Ok(rec)
}

fn random_na(rng: &mut StdRng, m: usize, k: usize) -> NAPoint {
    NAPoint {
        v: (0..m).map(|_| rng.gen_range(-2.0..2.0)).collect(),
        z: (0..k).map(|_| rng.gen_range(-2.0..2.0)).collect(),
        a: rng.gen_range(-2.0f64..2.0).exp(),
    }
}

fn scale(x: &NAPoint) -> f64 {
    x.v.iter().chain(&x.z).fold(x.a, |m, t| m.max(t.abs())).max(1.0)
}

fn random_disk(rng: &mut StdRng) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.0f64..2.0).tanh(), rng.gen_range(0.0..2.0 * PI))
}

/// Group axioms, geodesic inversion and distance symmetry on two H-type
/// groups; Möbius round trips, triangle inequality and rotation
/// invariance on the disk.
pub fn geometry(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let mut rec = ctx.record(cfg).input("samples", GEOMETRY_SAMPLES);
    let mut rows = Vec::new();
    let mut rng = StdRng::seed_from_u64(GEOMETRY_SEED);
    for (label, s) in
        [("heisenberg-2", HTypeStructure::heisenberg(2)?), ("quaternionic-1", HTypeStructure::quaternionic(1)?)]
    {
        let (m, k) = (s.m(), s.k());
        let e = NAPoint::identity(m, k);
        let (mut id, mut assoc, mut inv, mut inv_sigma, mut sym) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for _ in 0..GEOMETRY_SAMPLES {
            let (x, y, z) = (random_na(&mut rng, m, k), random_na(&mut rng, m, k), random_na(&mut rng, m, k));
            id = finite_max([id, group_mul(&e, &x, &s)?.max_abs_diff(&x), group_mul(&x, &e, &s)?.max_abs_diff(&x)]);
            let l = group_mul(&group_mul(&x, &y, &s)?, &z, &s)?;
            let r = group_mul(&x, &group_mul(&y, &z, &s)?, &s)?;
            assoc = finite_max([assoc, l.max_abs_diff(&r) / scale(&l)]);
            let xi = group_inv(&x);
            inv = finite_max([inv, group_mul(&x, &xi, &s)?.max_abs_diff(&e), group_mul(&xi, &x, &s)?.max_abs_diff(&e)]);
            inv_sigma = finite_max([
                inv_sigma,
                geodesic_inversion(&geodesic_inversion(&x, &s)?, &s)?.max_abs_diff(&x) / scale(&x),
            ]);
            sym = finite_max([sym, (geodesic_rho(&x) - geodesic_rho(&xi)).abs()]);
        }
        let sigma_e = geodesic_inversion(&e, &s)?.max_abs_diff(&e);
        for (name, v, tol) in [
            ("identity", id, 1e-12),
            ("associativity", assoc, 1e-12),
            ("inverse", inv, 1e-12),
            ("sigma-involution", inv_sigma, 1e-12),
            ("sigma-identity", sigma_e, 0.0),
            ("rho-symmetry", sym, 1e-10),
        ] {
            rows.push((label, name, v));
            rec.push(Metric::at_most(format!("{name}[{label}]"), v, tol));
        }
    }
    let (mut round, mut tri, mut rot) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..GEOMETRY_SAMPLES {
        let (a, b, c) = (random_disk(&mut rng), random_disk(&mut rng), random_disk(&mut rng));
        round = finite_max([round, (mobius_to_origin(a, mobius_from_origin(a, b)) - b).norm()]);
        let (ab, bc, ac) = (disk_distance(a, b)?, disk_distance(b, c)?, disk_distance(a, c)?);
        tri = finite_max([tri, (ac - ab - bc).max(0.0) / (1.0 + ac)]);
        let u = Complex64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI));
        rot = finite_max([rot, (disk_distance(u * a, u * b)? - ab).abs() / (1.0 + ab)]);
    }
    for (name, v, tol) in
        [("mobius-roundtrip", round, 1e-14), ("triangle-excess", tri, 1e-12), ("rotation-invariance", rot, 1e-12)]
    {
        rows.push(("disk", name, v));
        rec.push(Metric::at_most(format!("{name}[disk]"), v, tol));
    }
    let cells: Vec<Vec<Cell>> = rows.iter().map(|&(g, n, v)| vec![Cell::S(g), Cell::S(n), Cell::F(v)]).collect();
    rec.artifacts.push(ctx.csv("geometry.csv", "geometry/v1", &["structure", "check", "value"], &cells)?);
    Ok(rec)
}
