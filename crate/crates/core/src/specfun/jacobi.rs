//! Jacobi functions φ_λ^{(α,β)}(t) = ₂F₁((ρ+iλ)/2, (ρ-iλ)/2; α+1; -sinh²t).

use super::hyp2f1::{hyp2f1_many, hyp2f1_with_derivative};
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Jacobi indices with ρ = α + β + 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
    pub rho0: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) || !beta.is_finite() {
            return Err(Error::InvalidInput(format!("Jacobi indices need alpha > -1, got ({alpha}, {beta})")));
        }
        Ok(Self { alpha, beta, rho0: alpha + beta + 1.0 })
    }

    fn hyp_params(&self, lambda: Complex64) -> (Complex64, Complex64, Complex64) {
        let il = Complex64::i() * lambda;
        ((self.rho0 + il) * 0.5, (self.rho0 - il) * 0.5, Complex64::new(self.alpha + 1.0, 0.0))
    }
}

fn check_t(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("Jacobi function needs t >= 0, got {t}")))
    }
}

fn x_of(t: f64) -> f64 {
    -t.sinh().powi(2)
}

pub fn jacobi_phi(p: JacobiParams, lambda: Complex64, t: f64) -> Result<Complex64> {
    Ok(jacobi_phi_with_derivative(p, lambda, t)?.0)
}

/// φ_λ(t) together with dφ_λ/dt.
pub fn jacobi_phi_with_derivative(p: JacobiParams, lambda: Complex64, t: f64) -> Result<(Complex64, Complex64)> {
    check_t(t)?;
    let (a, b, c) = p.hyp_params(lambda);
    let v = hyp2f1_with_derivative(a, b, c, x_of(t))?;
    Ok((v.value, -(2.0 * t).sinh() * v.derivative))
}

/// φ_λ at many t, in input order.
pub fn jacobi_phi_many(p: JacobiParams, lambda: Complex64, ts: &[f64]) -> Result<Vec<Complex64>> {
    Ok(jacobi_phi_many_with_derivative(p, lambda, ts)?.into_iter().map(|v| v.0).collect())
}

pub fn jacobi_phi_many_with_derivative(
    p: JacobiParams,
    lambda: Complex64,
    ts: &[f64],
) -> Result<Vec<(Complex64, Complex64)>> {
    for &t in ts {
        check_t(t)?;
    }
    let (a, b, c) = p.hyp_params(lambda);
    let xs: Vec<f64> = ts.iter().map(|&t| x_of(t)).collect();
    Ok(hyp2f1_many(a, b, c, &xs)?
        .into_iter()
        .zip(ts)
        .map(|(v, &t)| (v.value, -(2.0 * t).sinh() * v.derivative))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_one_at_origin_and_even() {
        let p = JacobiParams::new(1.0, 0.0).unwrap();
        for &l in &[Complex64::new(0.5, 0.0), Complex64::new(3.0, -1.2), Complex64::new(0.0, 2.5)] {
            assert!((jacobi_phi(p, l, 0.0).unwrap() - 1.0).norm() < 1e-15);
            for &t in &[0.3, 1.7, 4.0] {
                let a = jacobi_phi(p, l, t).unwrap();
                let b = jacobi_phi(p, -l, t).unwrap();
                assert!((a - b).norm() <= 1e-13 * a.norm().max(1e-12));
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let p = JacobiParams::new(1.5, 0.5).unwrap();
        let l = Complex64::new(2.0, 0.7);
        let h = 1e-5;
        for &t in &[0.4, 2.0] {
            let fd = (jacobi_phi(p, l, t + h).unwrap() - jacobi_phi(p, l, t - h).unwrap()) / (2.0 * h);
            let (_, d) = jacobi_phi_with_derivative(p, l, t).unwrap();
            assert!((fd - d).norm() < 1e-7 * d.norm().max(1.0));
        }
    }

    #[test]
    fn half_integer_closed_form() {
        // (α, β) = (1/2, -1/2): φ_λ(t) = sin(λt) / (λ sinh t).
        let p = JacobiParams::new(0.5, -0.5).unwrap();
        for &l in &[0.7f64, 3.0, 11.0, 25.0] {
            for &t in &[0.2f64, 1.0, 3.0, 6.0] {
                let e = (l * t).sin() / (l * t.sinh());
                let v = jacobi_phi(p, Complex64::new(l, 0.0), t).unwrap();
                assert!((v - e).norm() < 1e-11 * e.abs().max(1e-3 / t.sinh()), "λ={l} t={t}: {v} vs {e}");
            }
        }
    }

    #[test]
    fn rejects_negative_t() {
        let p = JacobiParams::new(0.0, 0.0).unwrap();
        assert!(jacobi_phi(p, Complex64::new(1.0, 0.0), -0.1).is_err());
    }
}
