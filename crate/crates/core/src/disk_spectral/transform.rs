//! Fourier-Helgason transform and spectral projection by quadrature.
//!
//! With dμ = ½ sinh(2r) dr dθ and dσ normalized:
//!   f̂(λ, w) = ∫_D 𝒫_{-λ}(z, w) f(z) dμ(z),
//!   𝑃_λf(z) = (1/4π) λ tanh(πλ/2) ∫ f̂(λ, w) 𝒫_λ(z, w) dσ(w),
//!   f(z) = ∫_ℝ 𝑃_λf(z) dλ.
//! For f = f_n(r)e^{inθ} about the origin, f̂(λ, w) = A_n(λ) wⁿ.

use super::function::SO2FiniteFunction;
use super::spherical::spherical_phi_disk;
use super::SphericalForm;
use crate::disk::{disk_distance, horocycle_bracket, mobius_from_origin, poisson_power_disk, BoundaryPoint, DiskPoint};
use crate::error::{Error, Result};
use crate::numerics::{composite_gauss, Rule};
use crate::specfun::{jacobi_density, JacobiParams};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

/// Quadrature sizes of the double-quadrature path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiskQuadrature {
    pub radial_panels: usize,
    pub radial_order: usize,
    pub n_theta: usize,
    pub n_boundary: usize,
}

impl Default for DiskQuadrature {
    fn default() -> Self {
        Self { radial_panels: 16, radial_order: 16, n_theta: 256, n_boundary: 512 }
    }
}

/// 1/(4π) λ tanh(πλ/2).
pub fn fh_density(lambda: Complex64) -> Complex64 {
    lambda * (PI * lambda / 2.0).tanh() / (4.0 * PI)
}

fn pole_check(lambda: Complex64) -> Result<()> {
    // tanh(πλ/2) has poles at λ = ±i(2k+1).
    let k = (lambda.im.abs() - 1.0) / 2.0;
    if lambda.re == 0.0 && k >= 0.0 && k.fract() == 0.0 {
        return Err(Error::Pole { function: "spectral projection", at: lambda });
    }
    Ok(())
}

/// Per-mode transforms A_n(λ) on a fixed radial rule and θ grid.
#[derive(Debug, Clone)]
pub struct ModeTransforms {
    function: SO2FiniteFunction,
    quad: DiskQuadrature,
    nodes: Vec<f64>,
    /// Per mode: w_i · f_n(r_i) · ½ sinh 2r_i · 2π.
    weights: BTreeMap<i32, Vec<Complex64>>,
    /// ⟨r_i e^{iψ_j}, 1⟩ on the θ grid, row-major in i.
    brackets: Vec<f64>,
}

impl ModeTransforms {
    pub fn new(f: &SO2FiniteFunction, quad: DiskQuadrature) -> Result<Self> {
        if quad.n_theta < 8 || quad.n_boundary < 8 {
            return Err(Error::InvalidInput("angular grids need at least 8 points".into()));
        }
        let rule: Rule = composite_gauss(0.0, f.radius(), quad.radial_panels, quad.radial_order);
        let weights = f
            .modes()
            .iter()
            .map(|(&n, p)| {
                let w = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(&r, &w)| p.eval(r) * (w * 0.5 * (2.0 * r).sinh() * TAU))
                    .collect();
                (n, w)
            })
            .collect();
        let one = BoundaryPoint::new(0.0);
        let mut brackets = Vec::with_capacity(rule.nodes.len() * quad.n_theta);
        for &r in &rule.nodes {
            for j in 0..quad.n_theta {
                let z = DiskPoint::from_polar(r, TAU * j as f64 / quad.n_theta as f64)?;
                brackets.push(horocycle_bracket(&z, &one));
            }
        }
        Ok(Self { function: f.clone(), quad, nodes: rule.nodes, weights, brackets })
    }

    pub fn function(&self) -> &SO2FiniteFunction {
        &self.function
    }

    /// A_n(λ) for every mode of f, in ascending n.
    pub fn eval(&self, lambda: Complex64) -> BTreeMap<i32, Complex64> {
        let nt = self.quad.n_theta;
        let e = Complex64::new(1.0, 0.0) - Complex64::i() * lambda;
        let ns: Vec<i32> = self.weights.keys().copied().collect();
        let cos_table: Vec<Vec<f64>> =
            ns.iter().map(|&n| (0..nt).map(|j| (n as f64 * TAU * j as f64 / nt as f64).cos()).collect()).collect();
        let mut out: BTreeMap<i32, Complex64> = ns.iter().map(|&n| (n, Complex64::new(0.0, 0.0))).collect();
        for i in 0..self.nodes.len() {
            let row = &self.brackets[i * nt..(i + 1) * nt];
            let mut acc = vec![Complex64::new(0.0, 0.0); ns.len()];
            for (j, &h) in row.iter().enumerate() {
                // The bracket is even in ψ, so only cos(nψ) survives.
                let k = (e * h).exp();
                for (a, c) in acc.iter_mut().zip(&cos_table) {
                    *a += k * c[j];
                }
            }
            for ((n, a), o) in ns.iter().zip(acc).zip(out.values_mut()) {
                *o += self.weights[n][i] * a / nt as f64;
            }
        }
        out
    }

    /// 𝑃_λf at points given in the function's local frame, via the boundary
    /// quadrature of (1/4π)λ tanh(πλ/2) Σ_n A_n ∫ wⁿ 𝒫_λ(z, w) dσ(w).
    pub fn project_local(&self, lambda: Complex64, zs: &[DiskPoint]) -> Result<Vec<Complex64>> {
        pole_check(lambda)?;
        if self.function.is_zero() {
            return Ok(vec![Complex64::new(0.0, 0.0); zs.len()]);
        }
        let a = self.eval(lambda);
        let dens = fh_density(lambda);
        let nb = self.quad.n_boundary;
        Ok(zs
            .iter()
            .map(|z| {
                let mut s = Complex64::new(0.0, 0.0);
                for l in 0..nb {
                    let phi = TAU * l as f64 / nb as f64;
                    let w = BoundaryPoint::new(phi);
                    let fw: Complex64 = a.iter().map(|(&n, an)| an * Complex64::from_polar(1.0, n as f64 * phi)).sum();
                    s += fw * poisson_power_disk(z, &w, lambda);
                }
                dens * s / nb as f64
            })
            .collect())
    }

    /// 𝑃_λf at disk points; the center is handled by the isometry τ.
    pub fn project(&self, lambda: Complex64, zs: &[DiskPoint]) -> Result<Vec<Complex64>> {
        let local: Vec<DiskPoint> = zs
            .iter()
            .map(|z| {
                let (r, t) = self.function.local_polar(z)?;
                DiskPoint::from_polar(r, t)
            })
            .collect::<Result<_>>()?;
        self.project_local(lambda, &local)
    }

    /// Σ_n |A_n(λ)|² = ∫ |f̂(λ, w)|² dσ(w).
    pub fn boundary_norm_sqr(&self, lambda: f64) -> f64 {
        self.eval(Complex64::new(lambda, 0.0)).values().map(|a| a.norm_sqr()).sum()
    }
}

/// f̂(λ, w) = ∫_D 𝒫_{-λ}(z, w) f(z) dμ(z) by direct polar quadrature about
/// the center of f.
pub fn fh_forward_disk(f: &SO2FiniteFunction, lambda: Complex64, w: &BoundaryPoint) -> Result<Complex64> {
    if f.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let q = DiskQuadrature::default();
    // dμ is invariant under τ, so integrate in the local frame.
    let rule = composite_gauss(0.0, f.radius(), q.radial_panels, q.radial_order);
    let mut s = Complex64::new(0.0, 0.0);
    for (&r, &wr) in rule.nodes.iter().zip(&rule.weights) {
        let mut ring = Complex64::new(0.0, 0.0);
        for j in 0..q.n_theta {
            let t = TAU * j as f64 / q.n_theta as f64;
            let zl = DiskPoint::from_polar(r, t)?;
            let z = DiskPoint::new(mobius_from_origin(f.center(), zl.z()))?;
            ring += poisson_power_disk(&z, w, -lambda) * f.eval_local(r, t);
        }
        s += ring * (wr * 0.5 * (2.0 * r).sinh() * TAU / q.n_theta as f64);
    }
    Ok(s)
}

/// Double-quadrature 𝑃_λf(z).
pub fn spectral_projection_disk(f: &SO2FiniteFunction, lambda: Complex64, z: &DiskPoint) -> Result<Complex64> {
    pole_check(lambda)?;
    if f.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(ModeTransforms::new(f, DiskQuadrature::default())?.project(lambda, std::slice::from_ref(z))?[0])
}

/// 𝑃_λf(z) = ∫_D φ_λ(d(z, z′)) f(z′) dν(z′), dν = dμ/2π.
pub fn projection_by_convolution(f: &SO2FiniteFunction, lambda: Complex64, z: &DiskPoint) -> Result<Complex64> {
    pole_check(lambda)?;
    if f.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let rule = composite_gauss(0.0, f.radius(), 8, 16);
    let nt = 256;
    let mut s = Complex64::new(0.0, 0.0);
    for (&r, &wr) in rule.nodes.iter().zip(&rule.weights) {
        let mut ring = Complex64::new(0.0, 0.0);
        for j in 0..nt {
            let t = TAU * j as f64 / nt as f64;
            let zp = mobius_from_origin(f.center(), DiskPoint::from_polar(r, t)?.z());
            let d = disk_distance(z.z(), zp)?;
            ring += spherical_phi_disk(lambda, d, SphericalForm::Closed)? * f.eval_local(r, t);
        }
        s += ring * (wr * 0.5 * (2.0 * r).sinh() / nt as f64);
    }
    Ok(s)
}

/// Trapezoid step in λ for the inversion integral.
pub const INVERSION_STEP: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncationWarning {
    pub lambda_max: f64,
    pub tail_estimate: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Inversion {
    pub values: Vec<Complex64>,
    /// Per point: ∫ over Λ-1 ≤ |λ| ≤ Λ of |𝑃_λf(z)|.
    pub tail_estimates: Vec<f64>,
    pub warning: Option<TruncationWarning>,
}

/// f(z) ≈ ∫_{-Λ}^{Λ} 𝑃_λf(z) dλ by the trapezoid rule with step 0.05, for a
/// projector returning values at all points for one λ.
pub fn inversion_disk<P>(projector: P, n_points: usize, lambda_max: f64, tolerance: f64) -> Result<Inversion>
where
    P: Fn(f64) -> Result<Vec<Complex64>> + Sync,
{
    if !(lambda_max > 0.0) {
        return Err(Error::InvalidInput(format!("lambda_max must be positive, got {lambda_max}")));
    }
    let steps = (lambda_max / INVERSION_STEP).round() as usize;
    let lambdas: Vec<f64> = (0..=2 * steps).map(|i| -lambda_max + INVERSION_STEP * i as f64).collect();
    let cols: Vec<Vec<Complex64>> = lambdas.par_iter().map(|&l| projector(l)).collect::<Result<_>>()?;
    if let Some(c) = cols.iter().find(|c| c.len() != n_points) {
        return Err(Error::DimensionMismatch { expected: n_points, got: c.len() });
    }
    let mut values = vec![Complex64::new(0.0, 0.0); n_points];
    let mut tails = vec![0.0; n_points];
    for (i, (l, c)) in lambdas.iter().zip(&cols).enumerate() {
        let w = if i == 0 || i == 2 * steps { 0.5 * INVERSION_STEP } else { INVERSION_STEP };
        for p in 0..n_points {
            values[p] += c[p] * w;
            if l.abs() >= lambda_max - 1.0 {
                tails[p] += c[p].norm() * w;
            }
        }
    }
    let worst = tails.iter().copied().fold(0.0, f64::max);
    let warning = (worst > tolerance).then_some(TruncationWarning { lambda_max, tail_estimate: worst, tolerance });
    Ok(Inversion { values, tail_estimates: tails, warning })
}

/// Inversion of the double-quadrature projector of `f` at `zs`.
pub fn inversion_of(f: &SO2FiniteFunction, zs: &[DiskPoint], lambda_max: f64, tolerance: f64) -> Result<Inversion> {
    let t = ModeTransforms::new(f, DiskQuadrature::default())?;
    inversion_disk(|l| t.project(Complex64::new(l, 0.0), zs), zs.len(), lambda_max, tolerance)
}

/// Gauss rule on [0, Λ]: unit panels, 16 points each.
fn lambda_rule(lambda_max: f64) -> Rule {
    composite_gauss(0.0, lambda_max, (lambda_max.ceil() as usize).max(1), 16)
}

/// 1/(4π) λ tanh(πλ/2) = κ · |c_{0,0}|^{-2}(λ) with κ = 1/(2π²).
pub fn disk_kappa() -> f64 {
    1.0 / (2.0 * PI * PI)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskPlancherel {
    pub kappa_analytic: f64,
    pub kappa_fitted: f64,
    pub calibration_gap: f64,
    pub norm_sqr: f64,
    pub spectral_norm_sqr: f64,
    pub relative_gap: f64,
}

/// Fits κ from f(z₀) = ∫_ℝ 𝑃_λf(z₀) dλ, then compares
/// ‖f‖² with 2κ∫₀^Λ |c_{0,0}|^{-2}(λ) ∫|f̂(λ,w)|²dσ(w) dλ.
pub fn plancherel_disk(f: &SO2FiniteFunction, lambda_max: f64) -> Result<DiskPlancherel> {
    let t = ModeTransforms::new(f, DiskQuadrature::default())?;
    let p00 = JacobiParams::new(0.0, 0.0)?;
    let rule = lambda_rule(lambda_max);
    let rows: Vec<(f64, Complex64, f64)> = rule
        .nodes
        .par_iter()
        .map(|&l| {
            let lc = Complex64::new(l, 0.0);
            let a = t.eval(lc);
            let d = jacobi_density(p00, lc)?.re;
            Ok((d, a.get(&0).copied().unwrap_or_default(), a.values().map(|x| x.norm_sqr()).sum()))
        })
        .collect::<Result<_>>()?;
    let f0 = f.eval_local(0.0, 0.0);
    let at_center: Complex64 = rows.iter().zip(&rule.weights).map(|((d, a0, _), w)| a0 * (w * d)).sum();
    let kappa_analytic = disk_kappa();
    let kappa_fitted = if at_center.norm() > 0.0 { (f0 / (2.0 * at_center)).re } else { kappa_analytic };
    let spectral: f64 = rows.iter().zip(&rule.weights).map(|((d, _, s), w)| w * d * s).sum();
    let norm_sqr = f.l2_norm_sqr();
    let spectral_norm_sqr = 2.0 * kappa_fitted * spectral;
    let relative_gap = if norm_sqr > 0.0 { (spectral_norm_sqr - norm_sqr).abs() / norm_sqr } else { 0.0 };
    Ok(DiskPlancherel {
        kappa_analytic,
        kappa_fitted,
        calibration_gap: (kappa_fitted / kappa_analytic - 1.0).abs(),
        norm_sqr,
        spectral_norm_sqr,
        relative_gap,
    })
}
