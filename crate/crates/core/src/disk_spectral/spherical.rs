//! Generalized spherical functions Φ_{λ,k} and the spherical function φ_λ
//! of the disk.
//!
//! Φ_{λ,k}(tanh r) = ∫ 𝒫_λ(tanh r, e^{iθ}) e^{ikθ} dσ(θ)
//!   = a_k(λ) tanh^{|k|}(r) ₂F₁((1+iλ)/2, (1-iλ)/2; 1+|k|; -sinh²r)
//! with a_k(λ) = ((1+iλ)/2)_{|k|} / |k|!, an entire function of λ.
//! φ_λ(r) = ½λ tanh(πλ/2) Φ_{λ,0}(r), so 𝑃_λf = f ∗ φ_λ against
//! dν = ½ sinh(2r) dr dσ(θ).

use crate::disk::{poisson_power_disk, BoundaryPoint, DiskPoint};
use crate::error::{Error, Result};
use crate::numerics::{gauss_legendre, integrate_circle};
use crate::specfun::{hyp2f1_many, legendre_p, pochhammer};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Evaluation path for spherical functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphericalForm {
    /// Hypergeometric (or Legendre) closed form.
    Closed,
    /// Trapezoid over the boundary circle, doubled until converged.
    Circle,
    /// Mehler-Dirichlet integral; only meaningful for k = 0.
    Mehler,
}

const CIRCLE_START: usize = 256;
const CIRCLE_MAX: usize = 1 << 17;
const CIRCLE_TOL: f64 = 1e-13;

pub fn expansion_coefficient(lambda: Complex64, k: i32) -> Complex64 {
    let m = k.unsigned_abs();
    let a = (Complex64::new(1.0, 0.0) + Complex64::i() * lambda) * 0.5;
    let fact: f64 = (1..=m).map(f64::from).product();
    pochhammer(a, m) / fact
}

fn check_radius(r: f64) -> Result<()> {
    if r >= 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("radius must be finite and non-negative, got {r}")))
    }
}

/// Φ_{λ,k}(tanh r) at several radii on the closed form.
pub fn generalized_spherical_many(lambda: Complex64, k: i32, rs: &[f64]) -> Result<Vec<Complex64>> {
    for &r in rs {
        check_radius(r)?;
    }
    let m = k.unsigned_abs();
    let a = (Complex64::new(1.0, 0.0) + Complex64::i() * lambda) * 0.5;
    let b = (Complex64::new(1.0, 0.0) - Complex64::i() * lambda) * 0.5;
    let xs: Vec<f64> = rs.iter().map(|r| -r.sinh().powi(2)).collect();
    let f = hyp2f1_many(a, b, Complex64::new(1.0 + m as f64, 0.0), &xs)?;
    let ak = expansion_coefficient(lambda, k);
    Ok(rs.iter().zip(f).map(|(r, v)| ak * r.tanh().powi(m as i32) * v.value).collect())
}

/// ∫ 𝒫_λ(tanh r, e^{iθ}) e^{ikθ} dσ(θ) by periodic trapezoid.
fn circle_phi_k(lambda: Complex64, k: i32, r: f64) -> Result<Complex64> {
    let z = DiskPoint::from_polar(r, 0.0)?;
    let at = |n: usize| {
        integrate_circle(
            |t| poisson_power_disk(&z, &BoundaryPoint::new(t), lambda) * Complex64::from_polar(1.0, k as f64 * t),
            n,
        )
    };
    let mut n = CIRCLE_START;
    let mut prev = at(n);
    // Rounding floor: |𝒫_λ| ≤ e^{r} on the circle.
    let floor = 1e-15 * r.exp();
    while n < CIRCLE_MAX {
        n *= 2;
        let next = at(n);
        if (next - prev).norm() <= CIRCLE_TOL * next.norm().max(1e-300) || (next - prev).norm() <= floor {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::ToleranceNotMet { estimate: prev, error_bound: CIRCLE_TOL })
}

pub fn generalized_spherical(lambda: Complex64, k: i32, r: f64, form: SphericalForm) -> Result<Complex64> {
    check_radius(r)?;
    match form {
        SphericalForm::Closed => Ok(generalized_spherical_many(lambda, k, &[r])?[0]),
        SphericalForm::Circle => circle_phi_k(lambda, k, r),
        SphericalForm::Mehler => {
            if k != 0 {
                return Err(Error::InvalidInput("the Mehler form exists only for k = 0".into()));
            }
            Ok(mehler_p(lambda, r))
        }
    }
}

/// ½λ tanh(πλ/2).
pub fn spherical_phi_disk_at_origin(lambda: Complex64) -> Complex64 {
    0.5 * lambda * (PI * lambda / 2.0).tanh()
}

/// P_{-(1+iλ)/2}(cosh 2r) = (√2/π)∫₀^{2r} cos(λs/2)/√(cosh 2r - cosh s) ds,
/// with s = 2r(1 - u²) removing the endpoint singularity.
fn mehler_p(lambda: Complex64, r: f64) -> Complex64 {
    if r == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let eta = 2.0 * r;
    let rule = gauss_legendre(64);
    let panels = 8 + (eta * (lambda.norm() + 1.0)).ceil() as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let (lo, hi) = (p as f64 / panels as f64, (p + 1) as f64 / panels as f64);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let u = lo + (hi - lo) * 0.5 * (x + 1.0);
            let s = eta * (1.0 - u * u);
            // cosh η - cosh s = 2 sinh((η+s)/2) sinh((η-s)/2), η - s = ηu².
            let gap = 2.0 * (0.5 * (eta + s)).sinh() * (0.5 * eta * u * u).sinh();
            let jac = 2.0 * eta * u;
            acc += (lambda * s / 2.0).cos() * (jac / gap.sqrt()) * (w * 0.5 * (hi - lo));
        }
    }
    acc * (2.0f64.sqrt() / PI)
}

/// φ_λ(tanh r) normalized by φ_λ(0) = ½λ tanh(πλ/2).
pub fn spherical_phi_disk(lambda: Complex64, r: f64, form: SphericalForm) -> Result<Complex64> {
    check_radius(r)?;
    let base = match form {
        SphericalForm::Closed => {
            legendre_p(-(Complex64::new(1.0, 0.0) + Complex64::i() * lambda) * 0.5, (2.0 * r).cosh())?
        }
        SphericalForm::Circle => circle_phi_k(lambda, 0, r)?,
        SphericalForm::Mehler => mehler_p(lambda, r),
    };
    Ok(spherical_phi_disk_at_origin(lambda) * base)
}
