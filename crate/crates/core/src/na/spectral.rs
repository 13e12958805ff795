//! Spherical transform, Plancherel density and radial spectral projection.
//!
//! The radial measure is A(ρ)dρ. With that normalization the calibrated
//! density is |c(λ)|^{-2} = κ / (c(2λ)c(-2λ)) in Jacobi normalization, and
//! f = ∫_ℝ 𝑃_λ f dλ with 𝑃_λ f = (c_{m,k}/4π)|c(λ)|^{-2} f̃(λ) Φ_λ.

use super::params::NAParams;
use super::spherical::{radial_density, spherical_phi_na, spherical_phi_na_many};
use crate::error::Result;
use crate::numerics::{composite_gauss, Rule};
use crate::profile::RadialProfile;
use crate::specfun::c_inverse_square;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// f̃(λ) = ∫₀^R f(ρ) Φ_λ(ρ) A(ρ) dρ on a fixed Gauss rule.
#[derive(Debug, Clone)]
pub struct SphericalTransform {
    params: NAParams,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl SphericalTransform {
    pub fn new(f: &RadialProfile, params: NAParams) -> Self {
        let rule = f.quadrature();
        let weights =
            rule.nodes.iter().zip(&rule.weights).map(|(&r, &w)| w * f.eval(r) * radial_density(&params, r)).collect();
        Self { params, nodes: rule.nodes, weights }
    }

    pub fn eval(&self, lambda: Complex64) -> Result<Complex64> {
        if self.weights.iter().all(|&w| w == 0.0) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let phi = spherical_phi_na_many(&self.params, lambda, &self.nodes)?;
        Ok(phi.iter().zip(&self.weights).fold(Complex64::new(0.0, 0.0), |acc, (p, &w)| acc + p * w))
    }

    /// ∫ |f|² A dρ on the same rule.
    pub fn norm_sqr(f: &RadialProfile, params: &NAParams) -> f64 {
        f.quadrature().apply(|r| f.eval(r).powi(2) * radial_density(params, r))
    }
}

pub fn spherical_transform(f: &RadialProfile, lambda: Complex64, p: &NAParams) -> Result<Complex64> {
    SphericalTransform::new(f, *p).eval(lambda)
}

/// κ = 1/c_{m,k}: the constant relating |c(λ)|^{-2} to the Jacobi density.
pub fn analytic_kappa(p: &NAParams) -> f64 {
    1.0 / p.c_mk()
}

/// Calibrated |c(λ)|^{-2}, continued off the real axis.
pub fn plancherel_density(p: &NAParams, kappa: f64, lambda: Complex64) -> Result<Complex64> {
    Ok(kappa * c_inverse_square(p.jacobi(), lambda)?)
}

/// 𝑃_λf(ρ) = (c_{m,k}/4π)|c(λ)|^{-2} f̃(λ) Φ_λ(ρ) with the analytic κ.
pub fn spectral_projection_radial(f: &RadialProfile, lambda: Complex64, rho: f64, p: &NAParams) -> Result<Complex64> {
    let ft = spherical_transform(f, lambda, p)?;
    projection_from_transform(p, analytic_kappa(p), lambda, ft, rho)
}

pub fn projection_from_transform(
    p: &NAParams,
    kappa: f64,
    lambda: Complex64,
    ft: Complex64,
    rho: f64,
) -> Result<Complex64> {
    if ft == Complex64::new(0.0, 0.0) {
        return Ok(ft);
    }
    let d = plancherel_density(p, kappa, lambda)?;
    Ok(p.c_mk() / (4.0 * PI) * d * ft * spherical_phi_na(p, lambda, rho)?)
}

/// Gauss rule on [0, Λ]: unit-width panels, 16 points each.
pub fn lambda_rule(lambda_max: f64) -> Rule {
    let panels = (lambda_max.ceil() as usize).max(1);
    composite_gauss(0.0, lambda_max, panels, 16)
}

/// (λ, f̃(λ), raw Jacobi density) on `rule`, in node order.
fn sweep(t: &SphericalTransform, p: &NAParams, rule: &Rule) -> Result<Vec<(f64, Complex64, f64)>> {
    rule.nodes
        .par_iter()
        .map(|&l| {
            let lc = Complex64::new(l, 0.0);
            Ok((l, t.eval(lc)?, c_inverse_square(p.jacobi(), lc)?.re))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Calibration {
    pub kappa_analytic: f64,
    pub kappa_fitted: f64,
    pub relative_gap: f64,
}

/// Fits κ from f(e) = ∫_ℝ 𝑃_λ f(e) dλ truncated at Λ.
pub fn calibrate_kappa(f: &RadialProfile, p: &NAParams, lambda_max: f64) -> Result<Calibration> {
    let t = SphericalTransform::new(f, *p);
    let rule = lambda_rule(lambda_max);
    let s = sweep(&t, p, &rule)?;
    let integral: f64 = s.iter().zip(&rule.weights).map(|((_, ft, d), w)| w * d * ft.re).sum();
    // ∫_ℝ = 2∫₀^Λ for the even integrand.
    let kappa_fitted = 4.0 * PI * f.eval(0.0) / (p.c_mk() * 2.0 * integral);
    let kappa_analytic = analytic_kappa(p);
    Ok(Calibration { kappa_analytic, kappa_fitted, relative_gap: (kappa_fitted / kappa_analytic - 1.0).abs() })
}

/// (‖f‖², (c_{m,k}/2π)∫₀^Λ |f̃|²|c(λ)|^{-2} dλ).
pub fn plancherel_check(f: &RadialProfile, p: &NAParams, lambda_max: f64, kappa: f64) -> Result<(f64, f64)> {
    let lhs = SphericalTransform::norm_sqr(f, p);
    let t = SphericalTransform::new(f, *p);
    let rule = lambda_rule(lambda_max);
    let s = sweep(&t, p, &rule)?;
    let int: f64 = s.iter().zip(&rule.weights).map(|((_, ft, d), w)| w * kappa * d * ft.norm_sqr()).sum();
    Ok((lhs, p.c_mk() / (2.0 * PI) * int))
}

/// (∫₀^Λ |𝑃_λf(x)|²|c(λ)|² dλ, (c_{m,k}/8π)‖f‖²) at ρ(x) = ρ.
pub fn l2_projection_bound_check(
    f: &RadialProfile,
    rho: f64,
    p: &NAParams,
    lambda_max: f64,
    kappa: f64,
) -> Result<(f64, f64)> {
    let norm = SphericalTransform::norm_sqr(f, p);
    let t = SphericalTransform::new(f, *p);
    let rule = lambda_rule(lambda_max);
    let s = sweep(&t, p, &rule)?;
    let phis: Vec<f64> = rule
        .nodes
        .par_iter()
        .map(|&l| Ok(spherical_phi_na(p, Complex64::new(l, 0.0), rho)?.norm_sqr()))
        .collect::<Result<_>>()?;
    let pref = p.c_mk() / (4.0 * PI);
    // |𝑃_λf|²|c|² = pref² · κ d · |f̃|² |Φ_λ|².
    let lhs: f64 = s
        .iter()
        .zip(&phis)
        .zip(&rule.weights)
        .map(|(((_, ft, d), ph), w)| w * pref * pref * kappa * d * ft.norm_sqr() * ph)
        .sum();
    Ok((lhs, p.c_mk() / (8.0 * PI) * norm))
}

/// f(ρ) ≈ ∫_{-Λ}^{Λ} 𝑃_λ f(ρ) dλ.
pub fn inversion_radial(
    f: &RadialProfile,
    p: &NAParams,
    rhos: &[f64],
    lambda_max: f64,
    kappa: f64,
) -> Result<Vec<f64>> {
    let t = SphericalTransform::new(f, *p);
    let rule = lambda_rule(lambda_max);
    let s = sweep(&t, p, &rule)?;
    let pref = p.c_mk() / (4.0 * PI) * kappa * 2.0;
    let cols: Vec<Vec<Complex64>> =
        s.par_iter().map(|&(l, _, _)| spherical_phi_na_many(p, Complex64::new(l, 0.0), rhos)).collect::<Result<_>>()?;
    Ok((0..rhos.len())
        .map(|i| {
            s.iter().zip(&cols).zip(&rule.weights).map(|(((_, ft, d), col), w)| w * pref * d * (ft * col[i]).re).sum()
        })
        .collect())
}
