//! Harish-Chandra c-function of Jacobi analysis and its Plancherel density.
//!
//! `jacobi_c` is c_{α,β}(μ); `c_function` takes the radial-space spectral
//! parameter λ with μ = 2λ.

use super::gamma::{gamma_complex, is_nonpositive_integer, ln_gamma_complex};
use super::jacobi::JacobiParams;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

fn rgamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        Ok(Complex64::new(0.0, 0.0))
    } else {
        Ok(1.0 / gamma_complex(z)?)
    }
}

fn i_times(mu: Complex64) -> Complex64 {
    Complex64::new(-mu.im, mu.re)
}

/// c_{α,β}(μ) = 2^{ρ-iμ} Γ(α+1) Γ(iμ) / [Γ((iμ+ρ)/2) Γ((iμ+α-β+1)/2)].
pub fn jacobi_c(p: JacobiParams, mu: Complex64) -> Result<Complex64> {
    let imu = i_times(mu);
    if is_nonpositive_integer(imu) {
        return Err(Error::Pole { function: "c", at: mu });
    }
    let pow = ((p.rho0 - imu) * LN_2).exp();
    Ok(pow
        * gamma_complex(Complex64::new(p.alpha + 1.0, 0.0))?
        * gamma_complex(imu)?
        * rgamma((imu + p.rho0) * 0.5)?
        * rgamma((imu + p.alpha - p.beta + 1.0) * 0.5)?)
}

/// c(λ) = c_{α,β}(2λ).
pub fn c_function(p: JacobiParams, lambda: Complex64) -> Result<Complex64> {
    if lambda == Complex64::new(0.0, 0.0) {
        return Err(Error::Pole { function: "c", at: lambda });
    }
    jacobi_c(p, 2.0 * lambda)
}

fn ln_sinh(w: Complex64) -> Complex64 {
    if w.re > 20.0 {
        w - LN_2 + (1.0 - (-2.0 * w).exp()).ln()
    } else if w.re < -20.0 {
        Complex64::new(0.0, PI) + ln_sinh(-w)
    } else {
        w.sinh().ln()
    }
}

/// 1 / (c(μ) c(-μ)), the meromorphic continuation of |c(μ)|^{-2} off the real
/// axis. Entire apart from the Gamma poles of the numerator.
pub fn jacobi_density(p: JacobiParams, mu: Complex64) -> Result<Complex64> {
    if mu == Complex64::new(0.0, 0.0) {
        return Ok(mu);
    }
    let imu = i_times(mu);
    let args = [
        (p.rho0 + imu) * 0.5,
        (p.rho0 - imu) * 0.5,
        (imu + p.alpha - p.beta + 1.0) * 0.5,
        (-imu + p.alpha - p.beta + 1.0) * 0.5,
    ];
    let mut ln = mu.ln() + ln_sinh(PI * mu)
        - PI.ln()
        - 2.0 * p.rho0 * LN_2
        - 2.0 * ln_gamma_complex(Complex64::new(p.alpha + 1.0, 0.0))?;
    for a in args {
        if is_nonpositive_integer(a) {
            return Err(Error::Pole { function: "plancherel density", at: mu });
        }
        ln += ln_gamma_complex(a)?;
    }
    let v = ln.exp();
    // Real μ: the density is real and non-negative.
    if mu.im == 0.0 {
        Ok(Complex64::new(v.re, 0.0))
    } else {
        Ok(v)
    }
}

/// |c(λ)|^{-2} continued to complex λ, with c(λ) = c_{α,β}(2λ).
pub fn c_inverse_square(p: JacobiParams, lambda: Complex64) -> Result<Complex64> {
    jacobi_density(p, 2.0 * lambda)
}
