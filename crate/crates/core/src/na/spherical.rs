use super::params::NAParams;
use crate::error::Result;
use crate::specfun::{jacobi_phi, jacobi_phi_many};
use num_complex::Complex64;

/// Φ_λ(ρ) = φ_{2λ}^{(α,β)}(ρ/2).
pub fn spherical_phi_na(p: &NAParams, lambda: Complex64, rho: f64) -> Result<Complex64> {
    jacobi_phi(p.jacobi(), 2.0 * lambda, rho / 2.0)
}

pub fn spherical_phi_na_many(p: &NAParams, lambda: Complex64, rhos: &[f64]) -> Result<Vec<Complex64>> {
    let t: Vec<f64> = rhos.iter().map(|r| r / 2.0).collect();
    jacobi_phi_many(p.jacobi(), 2.0 * lambda, &t)
}

/// A(ρ) = (2 sinh(ρ/2))^{m+k} (2 cosh(ρ/2))^k.
pub fn radial_density(p: &NAParams, rho: f64) -> f64 {
    (2.0 * (rho / 2.0).sinh()).powi((p.m() + p.k()) as i32) * (2.0 * (rho / 2.0).cosh()).powi(p.k() as i32)
}

/// A'/A = (m/2) coth(ρ/2) + k coth ρ.
pub fn radial_drift(p: &NAParams, rho: f64) -> f64 {
    p.m() as f64 / 2.0 / (rho / 2.0).tanh() + p.k() as f64 / rho.tanh()
}
