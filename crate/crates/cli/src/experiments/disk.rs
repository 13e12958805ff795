//! Disk experiments.

use super::{finite_max, Ctx};
use crate::config::{ProfileSpec, RunConfig};
use crate::report::{Cell, Metric, ReportRecord};
use drspec::disk::{mobius_from_origin, DiskPoint};
use drspec::disk_spectral::{
    generalized_spherical, inversion_disk, plancherel_disk, pw_envelope_disk_orders, ClosedFormProjector,
    DiskQuadrature, ModeTransforms, SO2FiniteFunction, SphericalForm,
};
use drspec::numerics::range_inclusive;
use drspec::{Complex64, Result};
use rayon::prelude::*;

/// Truncation K of residue sums.
pub const RESIDUE_K: u32 = 20;
/// Angle of the radial sample lines.
const SAMPLE_ANGLE: f64 = 0.7;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Function for mode `n`, restricted to that mode when read from JSON.
fn mode_function(cfg: &RunConfig, n: i32) -> Result<SO2FiniteFunction> {
    let f = cfg.disk_function(n)?;
    match cfg.profile {
        ProfileSpec::Json(_) => f.mode(n),
        _ => Ok(f),
    }
}

/// Point at local polar (r, θ) about the center of f.
fn point(f: &SO2FiniteFunction, r: f64, theta: f64) -> Result<DiskPoint> {
    let local = DiskPoint::from_polar(r, theta)?;
    DiskPoint::new(mobius_from_origin(f.center(), local.z()))
}

fn radii(cfg: &RunConfig, default: (f64, f64, f64)) -> Result<Vec<f64>> {
    match cfg.rho {
        Some(r) => Ok(vec![r]),
        None => range_inclusive(default.0, default.1, default.2),
    }
}

fn lambdas(cfg: &RunConfig, re: (f64, f64, f64)) -> Result<Vec<Complex64>> {
    if cfg.lambda.has_imaginary() {
        Ok(cfg.lambda.complex_grid(re, (0.0, 0.0, 1.0))?.points())
    } else {
        Ok(cfg.lambda.real_points(re)?.into_iter().map(c).collect())
    }
}

/// Φ_{λ,k}: circle integral against the closed form.
pub fn spherical(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let modes = cfg.modes(&(-5..=5).collect::<Vec<_>>())?;
    let ls = lambdas(cfg, (0.5, 10.0, 0.5))?;
    let rs = radii(cfg, (0.1, 2.0, 0.1))?;
    let mut jobs: Vec<(i32, Complex64, f64)> = Vec::new();
    for &k in &modes {
        for &l in &ls {
            jobs.extend(rs.iter().map(|&r| (k, l, r)));
        }
    }
    let vals: Vec<(Complex64, Complex64)> = jobs
        .par_iter()
        .map(|&(k, l, r)| {
            Ok((
                generalized_spherical(l, k, r, SphericalForm::Closed)?,
                generalized_spherical(l, k, r, SphericalForm::Circle)?,
            ))
        })
        .collect::<Result<_>>()?;
    let rel = finite_max(vals.iter().map(|(a, b)| if a.norm() > 0.0 { (a - b).norm() / a.norm() } else { b.norm() }));
    let rows: Vec<Vec<Cell>> = jobs
        .iter()
        .zip(&vals)
        .map(|(&(k, l, r), (a, b))| {
            vec![
                Cell::F(l.re),
                Cell::F(l.im),
                Cell::I(k as i64),
                Cell::F(r),
                Cell::F(a.re),
                Cell::F(a.im),
                Cell::F(b.re),
                Cell::F(b.im),
            ]
        })
        .collect();
    let mut rec = ctx.record(cfg);
    rec.artifacts.push(ctx.csv(
        "spherical.csv",
        "spherical-disk/v1",
        &["lambda_re", "lambda_im", "mode", "r", "value_re", "value_im", "circle_re", "circle_im"],
        &rows,
    )?);
    rec.push(Metric::at_most("rel-error", rel, 1e-8));
    Ok(rec)
}

/// Closed meromorphic form against the double quadrature, sup-relative per (n, λ).
pub fn project(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let modes = cfg.modes(&(-3..=3).collect::<Vec<_>>())?;
    let ls = lambdas(cfg, (0.5, 8.0, 0.5))?;
    let rs = radii(cfg, (0.0, 1.5, 0.25))?;
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    for &n in &modes {
        let f = mode_function(cfg, n)?;
        let zs: Vec<DiskPoint> = rs.iter().map(|&r| point(&f, r, SAMPLE_ANGLE)).collect::<Result<_>>()?;
        let closed = ClosedFormProjector::new(&f, n)?;
        let quad = ModeTransforms::new(&f, DiskQuadrature::default())?;
        let cols: Vec<(Vec<Complex64>, Vec<Complex64>)> = ls
            .par_iter()
            .map(|&l| {
                let a: Vec<Complex64> = zs.iter().map(|z| closed.value(l, z)).collect::<Result<_>>()?;
                Ok((a, quad.project(l, &zs)?))
            })
            .collect::<Result<_>>()?;
        for (&l, (a, b)) in ls.iter().zip(&cols) {
            let scale = b.iter().map(|v| v.norm()).fold(0.0, f64::max);
            let diff = a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            let rel = if scale > 0.0 { diff / scale } else { diff };
            worst = if rel.is_nan() { f64::NAN } else { worst.max(rel) };
            for ((&r, x), y) in rs.iter().zip(a).zip(b) {
                rows.push(vec![
                    Cell::F(l.re),
                    Cell::F(l.im),
                    Cell::I(n as i64),
                    Cell::F(r),
                    Cell::F(x.re),
                    Cell::F(x.im),
                    Cell::F(y.re),
                    Cell::F(y.im),
                ]);
            }
        }
    }
    let mut rec = ctx.record(cfg);
    rec.artifacts.push(ctx.csv(
        "projection.csv",
        "project-disk/v1",
        &["lambda_re", "lambda_im", "mode", "r", "value_re", "value_im", "quadrature_re", "quadrature_im"],
        &rows,
    )?);
    rec.push(Metric::at_most("rel-error", worst, 1e-6));
    Ok(rec)
}

/// Inversion of the double-quadrature projector inside and outside the support.
pub fn roundtrip(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let modes = cfg.modes(&[0])?;
    let lambda_max = cfg.lambda.cutoff(40.0);
    let mut rec = ctx.record(cfg).input("lambda_max", lambda_max);
    let mut rows = Vec::new();
    for &n in &modes {
        let f = mode_function(cfg, n)?;
        let big_r = f.radius();
        let inside: Vec<f64> = match cfg.rho {
            Some(r) => vec![r],
            None => range_inclusive(0.0, big_r, 0.05)?.into_iter().filter(|&r| r < big_r).collect(),
        };
        let outside: Vec<f64> = match cfg.rho {
            Some(_) => vec![],
            None => range_inclusive(big_r + 0.05, big_r + 1.0, 0.05)?,
        };
        let all: Vec<f64> = inside.iter().chain(&outside).copied().collect();
        let zs: Vec<DiskPoint> = all.iter().map(|&r| point(&f, r, SAMPLE_ANGLE)).collect::<Result<_>>()?;
        let t = ModeTransforms::new(&f, DiskQuadrature::default())?;
        let inv = inversion_disk(|l| t.project(c(l), &zs), zs.len(), lambda_max, 1e-4)?;
        let exact: Vec<Complex64> = zs.iter().map(|z| f.eval(z)).collect::<Result<_>>()?;
        let fmax = exact.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1e-300);
        let (mut e_in, mut e_out) = (0.0f64, 0.0f64);
        for (i, ((&r, v), e)) in all.iter().zip(&inv.values).zip(&exact).enumerate() {
            let err = (v - e).norm() / fmax;
            if r < big_r {
                e_in = e_in.max(err);
            } else {
                e_out = e_out.max(err);
            }
            rows.push(vec![
                Cell::I(n as i64),
                Cell::F(r),
                Cell::F(v.re),
                Cell::F(v.im),
                Cell::F(e.re),
                Cell::F(e.im),
                Cell::F(inv.tail_estimates[i]),
            ]);
        }
        rec.push(Metric::at_most(format!("inside-error[n={n}]"), e_in, 1e-3));
        if !outside.is_empty() {
            rec.push(Metric::at_most(format!("outside-error[n={n}]"), e_out, 1e-3));
        }
        rec.push(Metric::diagnostic(
            format!("tail-estimate[n={n}]"),
            inv.tail_estimates.iter().copied().fold(0.0, f64::max),
        ));
    }
    rec.artifacts.push(ctx.csv(
        "roundtrip.csv",
        "roundtrip-disk/v1",
        &["mode", "r", "inverted_re", "inverted_im", "exact_re", "exact_im", "tail_estimate"],
        &rows,
    )?);
    Ok(rec)
}

/// Plancherel with κ fitted from f(z₀) = ∫ 𝑃_λf(z₀) dλ.
pub fn plancherel(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let lambda_max = cfg.lambda.cutoff(60.0);
    let f = match cfg.profile {
        ProfileSpec::Json(_) => cfg.disk_function(0)?,
        _ => cfg.disk_function(cfg.mode.unwrap_or(0))?,
    };
    let p = plancherel_disk(&f, lambda_max)?;
    let mut rec = ctx.record(cfg).input("lambda_max", lambda_max);
    let rows = vec![
        vec![Cell::S("kappa_analytic"), Cell::F(p.kappa_analytic)],
        vec![Cell::S("kappa_fitted"), Cell::F(p.kappa_fitted)],
        vec![Cell::S("norm_sqr"), Cell::F(p.norm_sqr)],
        vec![Cell::S("spectral_norm_sqr"), Cell::F(p.spectral_norm_sqr)],
    ];
    rec.artifacts.push(ctx.csv("plancherel.csv", "plancherel-disk/v1", &["quantity", "value"], &rows)?);
    rec.push(Metric::at_most("relative-gap", p.relative_gap, 1e-3));
    rec.push(Metric::diagnostic("calibration-gap", p.calibration_gap));
    Ok(rec)
}

/// Upper-half-plane residue partial sums, lower-half-plane as diagnostic.
pub fn residue_sum(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let modes = cfg.modes(&[0, 1])?;
    let mut rec = ctx.record(cfg).input("k_max", RESIDUE_K);
    let mut rows = Vec::new();
    for &n in &modes {
        let f = mode_function(cfg, n)?;
        let rs = match cfg.rho {
            Some(r) => vec![r],
            None => vec![0.5 * f.radius(), f.radius() + 1.0],
        };
        let p = ClosedFormProjector::new(&f, n)?;
        for &r in &rs {
            let z = point(&f, r, 0.2)?;
            let (mut up, mut sym) = (c(0.0), c(0.0));
            for k in n.unsigned_abs()..=RESIDUE_K {
                let a = p.residue(k, 1, &z)?;
                let b = p.residue(k, -1, &z)?;
                up += a;
                sym += a + b;
                rows.push(vec![
                    Cell::I(n as i64),
                    Cell::F(r),
                    Cell::I(k as i64),
                    Cell::F(a.re),
                    Cell::F(a.im),
                    Cell::F(b.re),
                    Cell::F(b.im),
                    Cell::F(up.norm()),
                ]);
            }
            let tag = format!("n={n},r={r}");
            rec.push(Metric::at_most(format!("residue-sum[{tag}]"), up.norm(), 1e-6));
            rec.push(Metric::diagnostic(format!("symmetric-sum[{tag}]"), sym.norm()));
        }
    }
    rec.artifacts.push(ctx.csv(
        "residues.csv",
        "residue-sum-disk/v1",
        &["mode", "r", "k", "upper_re", "upper_im", "lower_re", "lower_im", "upper_partial_abs"],
        &rows,
    )?);
    Ok(rec)
}

/// Certificates c_N for N = 1..4 and their response to halving R.
pub fn pw_envelope(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let modes = cfg.modes(&[0, 1])?;
    let grid = cfg.lambda.complex_grid((-12.0, 12.0, 0.5), (-3.0, 3.0, 0.25))?;
    let r_eval = cfg.rho.unwrap_or(0.5);
    let orders = [1, 2, 3, 4];
    let shrink = matches!(cfg.profile, ProfileSpec::Bump { .. });
    let mut rec = ctx.record(cfg).input("grid_points", grid.len()).input("r", r_eval);
    let mut rows = Vec::new();
    for &n in &modes {
        let f = mode_function(cfg, n)?;
        let mut fns = vec![f.clone()];
        if shrink {
            fns.push(SO2FiniteFunction::bump_mode(n, 0.5 * f.radius())?);
        }
        let mut fits = Vec::new();
        for g in &fns {
            let z = point(g, r_eval, 0.0)?;
            let fit = pw_envelope_disk_orders(g, &grid, &orders, &z)?;
            for e in &fit {
                rows.push(vec![
                    Cell::I(n as i64),
                    Cell::F(g.radius()),
                    Cell::I(e.model_order as i64),
                    Cell::F(e.fitted_constant),
                    Cell::I(e.samples as i64),
                ]);
                rec.push(Metric::finite(
                    format!("certificate[n={n},R={},N={}]", g.radius(), e.model_order),
                    e.fitted_constant,
                ));
            }
            fits.push(fit);
        }
        if shrink {
            for (a, b) in fits[0].iter().zip(&fits[1]) {
                let ratio = b.fitted_constant / a.fitted_constant;
                rec.push(Metric::at_most(format!("shrink-ratio[n={n},N={}]", a.model_order), ratio, 1.0));
            }
        }
    }
    rec.artifacts.push(ctx.csv(
        "pw_envelope.csv",
        "pw-envelope-disk/v1",
        &["mode", "support_radius", "order", "constant", "samples"],
        &rows,
    )?);
    Ok(rec)
}
