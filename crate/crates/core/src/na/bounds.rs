//! Growth certificates: Koornwinder's Jacobi-function estimate and
//! Paley-Wiener envelopes of radial spectral projections.

use super::params::NAParams;
use super::spectral::SphericalTransform;
use super::spherical::spherical_phi_na;
use crate::error::{Error, Result};
use crate::numerics::{fit_ratios, pw_weight, range_inclusive, ComplexGrid, EnvelopeFit, EnvelopeKind};
use crate::profile::RadialProfile;
use crate::specfun::{gamma_real, jacobi_phi_many_with_derivative, JacobiParams};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Sampling step in t for the Koornwinder check.
pub const KOORNWINDER_T_STEP: f64 = 0.05;

/// C = max |Γ(α+1)^{-1} dⁿφ_λ/dtⁿ(t)| / [(1+|λ|)ⁿ(1+t)e^{(|Im λ|-ρ)t}] over
/// grid × {0, 0.05, …, t_max}.
pub fn koornwinder_bound_check(p: JacobiParams, n: u32, grid: &ComplexGrid, t_max: f64) -> Result<EnvelopeFit> {
    if n > 1 {
        return Err(Error::InvalidInput(format!("derivative order must be 0 or 1, got {n}")));
    }
    if !(p.alpha > -0.5) {
        return Err(Error::InvalidInput(format!("need alpha > -1/2, got {}", p.alpha)));
    }
    let ts = range_inclusive(0.0, t_max, KOORNWINDER_T_STEP)?;
    let g = gamma_real(p.alpha + 1.0)?;
    let lambdas = grid.points();
    let per_lambda: Vec<Vec<(f64, f64)>> = lambdas
        .par_iter()
        .map(|&l| {
            let vals = jacobi_phi_many_with_derivative(p, l, &ts)?;
            Ok(vals
                .iter()
                .zip(&ts)
                .map(|(&(v, d), &t)| {
                    let x = if n == 0 { v } else { d };
                    let env = (1.0 + l.norm()).powi(n as i32) * (1.0 + t) * ((l.im.abs() - p.rho0) * t).exp();
                    (x.norm() / g, env)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    fit_ratios(n as i32, per_lambda.into_iter().flatten())
}

/// Poles of |c(λ)|^{-2} with |Im λ| ≤ im_max.
pub fn density_poles(p: &NAParams, im_max: f64) -> Vec<Complex64> {
    let jp = p.jacobi();
    let mut out = Vec::new();
    for shift in [jp.rho0 / 2.0, (jp.alpha - jp.beta + 1.0) / 2.0] {
        let mut j = 0.0;
        while shift + j <= im_max {
            for s in [1.0, -1.0] {
                let z = Complex64::new(0.0, s * (shift + j));
                if !out.contains(&z) {
                    out.push(z);
                }
            }
            j += 1.0;
        }
    }
    out
}

/// Certificates for |𝑃_λf(x)|/|c(λ)|^{-2} = (c_{m,k}/4π)|f̃(λ)Φ_λ(ρ)| against
/// (1+|λ|²)^{-N₀} e^{|Im λ|(ρ + a)}, one per order, pole discs of radius 0.2
/// excluded.
pub fn pw_envelope_radial_orders(
    f: &RadialProfile,
    p: &NAParams,
    grid: &ComplexGrid,
    orders: &[i32],
    rho: f64,
    claimed_radius: f64,
) -> Result<Vec<EnvelopeFit>> {
    let im_max = grid.im_points().iter().fold(0.0f64, |m, y| m.max(y.abs()));
    let pts = grid.points_excluding(&density_poles(p, im_max + 1.0), 0.2);
    let t = SphericalTransform::new(f, *p);
    let pref = p.c_mk() / (4.0 * PI);
    let mags: Vec<f64> = pts
        .par_iter()
        .map(|&l| Ok(pref * (t.eval(l)? * spherical_phi_na(p, l, rho)?).norm()))
        .collect::<Result<_>>()?;
    orders
        .iter()
        .map(|&n| {
            fit_ratios(
                n,
                pts.iter()
                    .zip(&mags)
                    .map(|(&l, &v)| (v, pw_weight(EnvelopeKind::Quadratic, l, n, rho + claimed_radius))),
            )
        })
        .collect()
}

pub fn pw_envelope_radial(
    f: &RadialProfile,
    p: &NAParams,
    grid: &ComplexGrid,
    n0: i32,
    rho: f64,
    claimed_radius: f64,
) -> Result<EnvelopeFit> {
    Ok(pw_envelope_radial_orders(f, p, grid, &[n0], rho, claimed_radius)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koornwinder_origin_ratio() {
        let p = JacobiParams::new(1.0, 0.0).unwrap();
        let g = ComplexGrid::new(vec![0.0], vec![0.0]).unwrap();
        let f = koornwinder_bound_check(p, 0, &g, 0.0).unwrap();
        assert!((f.fitted_constant - 1.0).abs() < 1e-15);
        assert!(koornwinder_bound_check(p, 2, &g, 1.0).is_err());
    }

    #[test]
    fn poles_of_two_one() {
        let p = NAParams::new(2, 1).unwrap();
        let mut ims: Vec<f64> = density_poles(&p, 3.0).iter().map(|z| z.im).collect();
        ims.sort_by(f64::total_cmp);
        assert_eq!(ims, vec![-3.0, -2.0, -1.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn zero_profile_certificate() {
        let p = NAParams::new(2, 1).unwrap();
        let g = ComplexGrid::from_ranges((-2.0, 2.0, 1.0), (-1.0, 1.0, 0.5)).unwrap();
        let z = RadialProfile::zero(1.0).unwrap();
        assert_eq!(pw_envelope_radial(&z, &p, &g, 2, 0.0, 1.0).unwrap().fitted_constant, 0.0);
    }
}
