use crate::error::{Error, Result};
use crate::specfun::{gamma_real, JacobiParams};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Dimensions (m, k) of a Damek-Ricci space: dim 𝔳 = m (even), dim 𝔷 = k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct NAParams {
    m: u32,
    k: u32,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    m: u32,
    k: u32,
}

impl TryFrom<RawParams> for NAParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        NAParams::new(r.m, r.k)
    }
}

impl From<NAParams> for RawParams {
    fn from(p: NAParams) -> Self {
        RawParams { m: p.m, k: p.k }
    }
}

impl NAParams {
    pub fn new(m: u32, k: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(2) || k == 0 {
            return Err(Error::InvalidInput(format!("need m even positive and k positive, got m={m}, k={k}")));
        }
        Ok(Self { m, k })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Homogeneous dimension Q = m/2 + k.
    pub fn q(&self) -> f64 {
        self.m as f64 / 2.0 + self.k as f64
    }

    pub fn alpha(&self) -> f64 {
        (self.m + self.k) as f64 / 2.0 - 0.5
    }

    pub fn beta(&self) -> f64 {
        (self.k as f64 - 1.0) / 2.0
    }

    pub fn jacobi(&self) -> JacobiParams {
        JacobiParams::new(self.alpha(), self.beta()).expect("alpha >= 1/2")
    }

    /// c_{m,k} = 2^{k-1} Γ((2m+k+1)/2) π^{-(2m+k+1)/2}.
    pub fn c_mk(&self) -> f64 {
        let s = (2 * self.m + self.k + 1) as f64 / 2.0;
        2f64.powi(self.k as i32 - 1) * gamma_real(s).expect("positive argument") * PI.powf(-s)
    }

    /// Eigenvalue of Φ_λ under the Laplace-Beltrami operator.
    pub fn eigenvalue(&self, lambda: num_complex::Complex64) -> num_complex::Complex64 {
        -(lambda * lambda + self.q() * self.q() / 4.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let p = NAParams::new(2, 1).unwrap();
        assert_eq!(p.q(), 2.0);
        assert_eq!(p.alpha(), 1.0);
        assert_eq!(p.beta(), 0.0);
        assert!((p.c_mk() - 2.0 / PI.powi(3)).abs() < 1e-15);
        assert_eq!(p.jacobi().rho0, p.q());
    }

    #[test]
    fn validation_and_json() {
        assert!(NAParams::new(3, 1).is_err());
        assert!(NAParams::new(2, 0).is_err());
        let p: NAParams = serde_json::from_str(r#"{"m":4,"k":3}"#).unwrap();
        assert_eq!((p.m(), p.k()), (4, 3));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"m":4,"k":3}"#);
        assert!(serde_json::from_str::<NAParams>(r#"{"m":1,"k":3}"#).is_err());
    }
}
