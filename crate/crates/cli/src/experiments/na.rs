//! Radial experiments on NA and the Jacobi-function certificate.

use super::{finite_max, Ctx};
use crate::config::{ProfileSpec, RunConfig, Space};
use crate::report::{Cell, Metric, ReportRecord};
use drspec::na::spherical::spherical_phi_na_many;
use drspec::na::{
    analytic_kappa, calibrate_kappa, inversion_radial, l2_projection_bound_check, plancherel_check,
    pw_envelope_radial_orders, spectral_projection_radial, SphericalTransform,
};
use drspec::numerics::range_inclusive;
use drspec::profile::RadialProfile;
use drspec::specfun::JacobiParams;
use drspec::{Complex64, Result};
use rayon::prelude::*;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rhos(cfg: &RunConfig, default: &[f64]) -> Vec<f64> {
    cfg.rho.map_or_else(|| default.to_vec(), |r| vec![r])
}

fn lambdas(cfg: &RunConfig, re: (f64, f64, f64)) -> Result<Vec<Complex64>> {
    if cfg.lambda.has_imaginary() {
        Ok(cfg.lambda.complex_grid(re, (0.0, 0.0, 1.0))?.points())
    } else {
        Ok(cfg.lambda.real_points(re)?.into_iter().map(c).collect())
    }
}

/// Φ_λ(ρ) over a λ grid, with Φ_λ(0) = 1 and Φ_{-λ} = Φ_λ.
pub fn spherical(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = cfg.na_params()?;
    let ls = lambdas(cfg, (0.0, 10.0, 0.5))?;
    let rs = rhos(cfg, &[0.0, 0.5, 1.0, 2.0]);
    let cols: Vec<(Vec<Complex64>, Vec<Complex64>)> = ls
        .par_iter()
        .map(|&l| Ok((spherical_phi_na_many(&p, l, &rs)?, spherical_phi_na_many(&p, -l, &rs)?)))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let (mut origin, mut even) = (0.0f64, 0.0f64);
    for (&l, (a, b)) in ls.iter().zip(&cols) {
        for ((&r, x), y) in rs.iter().zip(a).zip(b) {
            if r == 0.0 {
                origin = finite_max([origin, (x - 1.0).norm()]);
            }
            even = finite_max([even, (x - y).norm() / x.norm().max(1.0)]);
            rows.push(vec![Cell::F(l.re), Cell::F(l.im), Cell::F(r), Cell::F(x.re), Cell::F(x.im)]);
        }
    }
    let mut rec = ctx.record(cfg);
    rec.artifacts.push(ctx.csv(
        "spherical.csv",
        "spherical-na/v1",
        &["lambda_re", "lambda_im", "rho", "value_re", "value_im"],
        &rows,
    )?);
    if rs.contains(&0.0) {
        rec.push(Metric::at_most("origin-error", origin, 1e-14));
    }
    rec.push(Metric::at_most("evenness", even, 1e-12));
    Ok(rec)
}

/// Radial projections 𝑃_λf(ρ); evenness in λ and reality of f̃ on the real axis.
pub fn project(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = cfg.na_params()?;
    let f = cfg.radial_profile()?;
    let ls = lambdas(cfg, (0.5, 8.0, 0.5))?;
    let rs = rhos(cfg, &[0.0, 0.5, 1.0, 1.5]);
    let t = SphericalTransform::new(&f, p);
    let cols: Vec<(Complex64, Vec<Complex64>, Vec<Complex64>)> = ls
        .par_iter()
        .map(|&l| {
            let a = rs.iter().map(|&r| spectral_projection_radial(&f, l, r, &p)).collect::<Result<_>>()?;
            let b = rs.iter().map(|&r| spectral_projection_radial(&f, -l, r, &p)).collect::<Result<_>>()?;
            Ok((t.eval(l)?, a, b))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let (mut even, mut imag) = (0.0f64, 0.0f64);
    for (&l, (ft, a, b)) in ls.iter().zip(&cols) {
        if l.im == 0.0 {
            imag = finite_max([imag, ft.im.abs() / ft.norm().max(1e-300)]);
        }
        let scale = a.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1e-300);
        for ((&r, x), y) in rs.iter().zip(a).zip(b) {
            even = finite_max([even, (x - y).norm() / scale]);
            rows.push(vec![Cell::F(l.re), Cell::F(l.im), Cell::F(r), Cell::F(x.re), Cell::F(x.im)]);
        }
    }
    let mut rec = ctx.record(cfg);
    rec.artifacts.push(ctx.csv(
        "projection.csv",
        "project-na/v1",
        &["lambda_re", "lambda_im", "rho", "value_re", "value_im"],
        &rows,
    )?);
    rec.push(Metric::at_most("evenness", even, 1e-10));
    if ls.iter().any(|l| l.im == 0.0) {
        rec.push(Metric::at_most("imag-residue", imag, 1e-12));
    }
    Ok(rec)
}

/// Inversion from the projection family with the analytic κ.
pub fn roundtrip(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = cfg.na_params()?;
    let f = cfg.radial_profile()?;
    let lambda_max = cfg.lambda.cutoff(160.0);
    let big_r = f.support_radius();
    let (inside, outside): (Vec<f64>, Vec<f64>) = match cfg.rho {
        Some(r) => (vec![r], vec![]),
        None => (
            range_inclusive(0.0, big_r, 0.05)?.into_iter().filter(|&r| r < big_r).collect(),
            range_inclusive(big_r + 0.05, big_r + 1.0, 0.05)?,
        ),
    };
    let all: Vec<f64> = inside.iter().chain(&outside).copied().collect();
    let inv = inversion_radial(&f, &p, &all, lambda_max, analytic_kappa(&p))?;
    let fmax = all.iter().map(|&r| f.eval(r).abs()).fold(0.0, f64::max).max(1e-300);
    let (mut e_in, mut e_out) = (0.0f64, 0.0f64);
    let mut rows = Vec::new();
    for (&r, &v) in all.iter().zip(&inv) {
        let e = f.eval(r);
        let err = (v - e).abs() / fmax;
        if r < big_r {
            e_in = finite_max([e_in, err]);
        } else {
            e_out = finite_max([e_out, err]);
        }
        rows.push(vec![Cell::F(r), Cell::F(v), Cell::F(e)]);
    }
    let mut rec = ctx.record(cfg).input("lambda_max", lambda_max);
    rec.artifacts.push(ctx.csv("roundtrip.csv", "roundtrip-na/v1", &["rho", "inverted", "exact"], &rows)?);
    rec.push(Metric::at_most("inside-error", e_in, 1e-3));
    if !outside.is_empty() {
        rec.push(Metric::at_most("outside-error", e_out, 1e-3));
    }
    Ok(rec)
}

/// Plancherel with κ fitted from the inversion formula at the identity.
pub fn plancherel(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = cfg.na_params()?;
    let f = cfg.radial_profile()?;
    let lambda_max = cfg.lambda.cutoff(160.0);
    let cal = calibrate_kappa(&f, &p, lambda_max)?;
    let (lhs, rhs) = plancherel_check(&f, &p, lambda_max, cal.kappa_fitted)?;
    let rhs_analytic = rhs * cal.kappa_analytic / cal.kappa_fitted;
    let rows = vec![
        vec![Cell::S("kappa_analytic"), Cell::F(cal.kappa_analytic)],
        vec![Cell::S("kappa_fitted"), Cell::F(cal.kappa_fitted)],
        vec![Cell::S("norm_sqr"), Cell::F(lhs)],
        vec![Cell::S("spectral_norm_sqr"), Cell::F(rhs)],
    ];
    let mut rec = ctx.record(cfg).input("lambda_max", lambda_max);
    rec.artifacts.push(ctx.csv("plancherel.csv", "plancherel-na/v1", &["quantity", "value"], &rows)?);
    rec.push(Metric::at_most("relative-gap", (rhs / lhs - 1.0).abs(), 1e-3));
    rec.push(Metric::diagnostic("calibration-gap", cal.relative_gap));
    rec.push(Metric::diagnostic("analytic-gap", (rhs_analytic / lhs - 1.0).abs()));
    Ok(rec)
}

fn l2_profiles(cfg: &RunConfig) -> Result<Vec<(String, RadialProfile)>> {
    match cfg.profile {
        ProfileSpec::Bump { radius } => Ok(vec![
            (format!("bump(R={})", 0.5 * radius), RadialProfile::bump(0.5 * radius)?),
            (format!("bump(R={radius})"), RadialProfile::bump(radius)?),
            (format!("bump(R={})", 2.0 * radius), RadialProfile::bump(2.0 * radius)?),
            (format!("tanh2-bump(R={radius})"), RadialProfile::bump_with_power(radius, 2)?),
        ]),
        _ => Ok(vec![("profile".into(), cfg.radial_profile()?)]),
    }
}

/// ∫|𝑃_λf(x)|²|c(λ)|² dλ ≤ (c_{m,k}/8π)‖f‖², with equality at the identity.
pub fn l2_bound(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = cfg.na_params()?;
    let lambda_max = cfg.lambda.cutoff(160.0);
    let kappa = analytic_kappa(&p);
    let rs = rhos(cfg, &[0.0, 0.5, 1.0, 2.0]);
    let profiles = l2_profiles(cfg)?;
    let (mut excess, mut eq_gap) = (f64::NEG_INFINITY, 0.0f64);
    let mut rows = Vec::new();
    for (name, f) in &profiles {
        for &r in &rs {
            let (lhs, rhs) = l2_projection_bound_check(f, r, &p, lambda_max, kappa)?;
            excess = if lhs.is_nan() || rhs.is_nan() { f64::NAN } else { excess.max(lhs - rhs) };
            if r == 0.0 {
                eq_gap = finite_max([eq_gap, (lhs / rhs - 1.0).abs()]);
            }
            rows.push(vec![Cell::S(name), Cell::F(r), Cell::F(lhs), Cell::F(rhs)]);
        }
    }
    let mut rec = ctx.record(cfg).input("lambda_max", lambda_max);
    rec.artifacts.push(ctx.csv("l2_bound.csv", "l2-bound-na/v1", &["profile", "rho", "lhs", "rhs"], &rows)?);
    rec.push(Metric::at_most("excess", excess, 1e-9));
    if rs.contains(&0.0) {
        rec.push(Metric::at_most("equality-gap", eq_gap, 1e-3));
    }
    Ok(rec)
}

/// Certificates for N₀ = 1..4 at the claimed radius R, and their response to
/// halving R.
pub fn pw_envelope(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let p = cfg.na_params()?;
    let f = cfg.radial_profile()?;
    let grid = cfg.lambda.complex_grid((-12.0, 12.0, 0.5), (-3.0, 3.0, 0.25))?;
    let big_r = f.support_radius();
    let rs = rhos(cfg, &[0.0, 2.0 * big_r]);
    let orders = [1, 2, 3, 4];
    let mut fns = vec![f];
    if matches!(cfg.profile, ProfileSpec::Bump { .. }) {
        fns.push(RadialProfile::bump(0.5 * big_r)?);
    }
    let mut rec = ctx.record(cfg).input("grid_points", grid.len());
    let mut rows = Vec::new();
    for &r in &rs {
        let mut fits = Vec::new();
        for g in &fns {
            let a = g.support_radius();
            let fit = pw_envelope_radial_orders(g, &p, &grid, &orders, r, a)?;
            for e in &fit {
                rows.push(vec![
                    Cell::F(r),
                    Cell::F(a),
                    Cell::I(e.model_order as i64),
                    Cell::F(e.fitted_constant),
                    Cell::I(e.samples as i64),
                ]);
                rec.push(Metric::finite(format!("certificate[rho={r},R={a},N={}]", e.model_order), e.fitted_constant));
            }
            fits.push(fit);
        }
        if fits.len() == 2 {
            for (a, b) in fits[0].iter().zip(&fits[1]) {
                rec.push(Metric::at_most(
                    format!("shrink-ratio[rho={r},N={}]", a.model_order),
                    b.fitted_constant / a.fitted_constant,
                    1.0,
                ));
            }
        }
    }
    rec.artifacts.push(ctx.csv(
        "pw_envelope.csv",
        "pw-envelope-na/v1",
        &["rho", "support_radius", "order", "constant", "samples"],
        &rows,
    )?);
    Ok(rec)
}

/// Base t_max of the Koornwinder check; the stability test doubles it.
pub const KOORNWINDER_T_MAX: f64 = 4.0;

fn jacobi_params(cfg: &RunConfig) -> Result<JacobiParams> {
    match cfg.space {
        Space::Na(p) => Ok(p.jacobi()),
        Space::Disk => JacobiParams::new(0.0, 0.0),
    }
}

/// Fitted constants for n ∈ {0, 1} and their growth when t_max doubles.
pub fn koornwinder(cfg: &RunConfig, ctx: &Ctx) -> Result<ReportRecord> {
    let jp = jacobi_params(cfg)?;
    let grid = cfg.lambda.complex_grid((-12.0, 12.0, 0.5), (-2.0, 2.0, 0.25))?;
    let t_max = KOORNWINDER_T_MAX;
    let mut rec = ctx.record(cfg).input("alpha", jp.alpha).input("beta", jp.beta).input("t_max", t_max);
    let mut rows = Vec::new();
    for n in [0u32, 1] {
        let a = drspec::na::koornwinder_bound_check(jp, n, &grid, t_max)?;
        let b = drspec::na::koornwinder_bound_check(jp, n, &grid, 2.0 * t_max)?;
        for (t, e) in [(t_max, &a), (2.0 * t_max, &b)] {
            rows.push(vec![Cell::I(n as i64), Cell::F(t), Cell::F(e.fitted_constant), Cell::I(e.samples as i64)]);
        }
        rec.push(Metric::finite(format!("constant[n={n}]"), a.fitted_constant));
        rec.push(Metric::at_most(format!("growth[n={n}]"), b.fitted_constant / a.fitted_constant - 1.0, 0.05));
    }
    rec.artifacts.push(ctx.csv("koornwinder.csv", "koornwinder/v1", &["n", "t_max", "constant", "samples"], &rows)?);
    Ok(rec)
}
