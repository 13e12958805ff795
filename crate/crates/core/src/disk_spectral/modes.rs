//! Angular mode analysis: decomposition of polar samples and eigenfunction
//! expansions F = Σ_k e^{ikθ} a_k(λ) tanh^{|k|}(r) ₂F₁(…; 1+|k|; -sinh²r).

use super::function::{ModeProfile, SO2FiniteFunction};
use crate::disk::{laplacian_disk_apply, to_polar, DiskPoint, LaplacianForm};
use crate::error::{Error, Result};
use crate::profile::RadialProfile;
use crate::specfun::hyp2f1;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// f sampled at (rᵢ, θⱼ = 2πj/N) about the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarSamples {
    pub radii: Vec<f64>,
    pub n_theta: usize,
    /// values[i][j] = f(tanh rᵢ e^{iθⱼ}).
    pub values: Vec<Vec<Complex64>>,
}

impl PolarSamples {
    pub fn from_fn<F: Fn(f64, f64) -> Complex64>(radii: Vec<f64>, n_theta: usize, f: F) -> Self {
        let values =
            radii.iter().map(|&r| (0..n_theta).map(|j| f(r, TAU * j as f64 / n_theta as f64)).collect()).collect();
        Self { radii, n_theta, values }
    }

    /// Σᵢ wᵢ (1/N)Σⱼ |f(rᵢ,θⱼ)|² · 2π · ½ sinh(2rᵢ) for weights `w`.
    pub fn weighted_norm_sqr(&self, weights: &[f64]) -> f64 {
        self.radii
            .iter()
            .zip(&self.values)
            .zip(weights)
            .map(|((&r, row), &w)| {
                w * TAU * 0.5 * (2.0 * r).sinh() * row.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.n_theta as f64
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AliasWarning {
    pub highest_mode: i32,
    pub n_theta: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub function: SO2FiniteFunction,
    /// Discrete coefficients c_n(rᵢ) of every retained mode.
    pub coefficients: BTreeMap<i32, Vec<Complex64>>,
    pub alias_warning: Option<AliasWarning>,
}

/// Relative mass below which a mode is dropped.
pub const MODE_DROP_TOL: f64 = 1e-12;

fn signed_mode(j: usize, n: usize) -> i32 {
    if j <= n / 2 {
        j as i32
    } else {
        j as i32 - n as i32
    }
}

/// Discrete θ-Fourier analysis per radius; modes are spline-interpolated in r.
/// Warns when a retained mode exceeds N_θ/4, half the resolvable band.
pub fn so2_decompose(samples: &PolarSamples) -> Result<Decomposition> {
    let n = samples.n_theta;
    if n < 8 || samples.values.len() != samples.radii.len() {
        return Err(Error::InvalidInput("need at least 8 angles and one row per radius".into()));
    }
    if let Some(row) = samples.values.iter().find(|row| row.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: row.len() });
    }
    let mut coeffs: BTreeMap<i32, Vec<Complex64>> = BTreeMap::new();
    for row in &samples.values {
        for j in 0..n {
            let m = signed_mode(j, n);
            let c: Complex64 = row
                .iter()
                .enumerate()
                .map(|(l, v)| v * Complex64::from_polar(1.0, -(m as f64) * TAU * l as f64 / n as f64))
                .sum::<Complex64>()
                / n as f64;
            coeffs.entry(m).or_default().push(c);
        }
    }
    let mass: BTreeMap<i32, f64> = coeffs.iter().map(|(&m, c)| (m, c.iter().map(|v| v.norm_sqr()).sum())).collect();
    let total: f64 = mass.values().sum();
    coeffs.retain(|m, _| total > 0.0 && mass[m] > MODE_DROP_TOL * total);
    let radius = *samples.radii.last().ok_or_else(|| Error::InvalidInput("no radii".into()))?;
    let mut modes = BTreeMap::new();
    for (&m, c) in &coeffs {
        let re = RadialProfile::from_samples(samples.radii.clone(), c.iter().map(|v| v.re).collect())?;
        let im = RadialProfile::from_samples(samples.radii.clone(), c.iter().map(|v| v.im).collect())?;
        modes.insert(m, ModeProfile { re, im: Some(im) });
    }
    let highest = coeffs.keys().map(|m| m.abs()).max().unwrap_or(0);
    let alias_warning = (highest as usize > n / 4).then_some(AliasWarning { highest_mode: highest, n_theta: n });
    Ok(Decomposition {
        function: SO2FiniteFunction::new(modes, radius, Complex64::new(0.0, 0.0))?,
        coefficients: coeffs,
        alias_warning,
    })
}

/// tanh^{|k|}(r) ₂F₁((1+iλ)/2, (1-iλ)/2; 1+|k|; -sinh²r).
pub fn radial_factor(lambda: Complex64, k: i32, r: f64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let c = Complex64::new(1.0 + k.unsigned_abs() as f64, 0.0);
    let h = hyp2f1((one + Complex64::i() * lambda) * 0.5, (one - Complex64::i() * lambda) * 0.5, c, -r.sinh().powi(2))?;
    Ok(h * r.tanh().powi(k.abs()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenExpansion {
    pub lambda: Complex64,
    pub coefficients: BTreeMap<i32, Complex64>,
    pub reference_radius: f64,
}

/// Reference radius and angle count used for coefficient extraction.
pub const EXPANSION_RADIUS: f64 = 1.0;
pub const EXPANSION_ANGLES: usize = 256;

/// a_k = [k-th θ-mode of F at r*] / [tanh^{|k|}r* ₂F₁(…; -sinh²r*)] for
/// |k| ≤ cutoff, after checking (Δ + λ² + 1)F ≈ 0 at r*.
pub fn eigen_expansion_coeffs<F>(field: F, lambda: Complex64, cutoff: u32) -> Result<EigenExpansion>
where
    F: Fn(Complex64) -> Complex64,
{
    let rs = EXPANSION_RADIUS;
    let n = EXPANSION_ANGLES;
    let t = rs.tanh();
    let probe = Complex64::from_polar(t, 0.7);
    let scale = (0..8).map(|j| field(Complex64::from_polar(t, TAU * j as f64 / 8.0)).norm()).fold(0.0, f64::max);
    if scale > 0.0 {
        let res = (laplacian_disk_apply(&field, probe, 2e-3, LaplacianForm::Cartesian)?
            + (lambda * lambda + 1.0) * field(probe))
        .norm();
        if res > 1e-3 * scale * (1.0 + lambda.norm_sqr()) {
            return Err(Error::InvalidInput(format!("field is not a λ-eigenfunction: residual {res:.3e} at r*")));
        }
    }
    let ring: Vec<Complex64> = (0..n).map(|j| field(Complex64::from_polar(t, TAU * j as f64 / n as f64))).collect();
    let mut coefficients = BTreeMap::new();
    for k in -(cutoff as i32)..=cutoff as i32 {
        let c: Complex64 = ring
            .iter()
            .enumerate()
            .map(|(j, v)| v * Complex64::from_polar(1.0, -(k as f64) * TAU * j as f64 / n as f64))
            .sum::<Complex64>()
            / n as f64;
        let factor = radial_factor(lambda, k, rs)?;
        if factor.norm() < 1e-10 {
            return Err(Error::IllConditioned(format!("radial factor {:.3e} for mode {k} at r*", factor.norm())));
        }
        coefficients.insert(k, c / factor);
    }
    Ok(EigenExpansion { lambda, coefficients, reference_radius: rs })
}

impl EigenExpansion {
    pub fn reconstruct(&self, z: &DiskPoint) -> Result<Complex64> {
        let (r, theta) = to_polar(z.z())?;
        let mut s = Complex64::new(0.0, 0.0);
        for (&k, a) in &self.coefficients {
            if *a == Complex64::new(0.0, 0.0) {
                continue;
            }
            let radial = radial_factor(self.lambda, k, r)?;
            s += a * radial * Complex64::from_polar(1.0, k as f64 * theta);
        }
        Ok(s)
    }
}
