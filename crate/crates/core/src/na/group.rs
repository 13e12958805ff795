//! The group NA = N ⋊ A with elements (V, Z, a).

use super::htype::HTypeStructure;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NAPoint {
    pub v: Vec<f64>,
    pub z: Vec<f64>,
    pub a: f64,
}

fn norm_sqr(x: &[f64]) -> f64 {
    x.iter().map(|t| t * t).sum()
}

impl NAPoint {
    pub fn new(v: Vec<f64>, z: Vec<f64>, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || v.iter().chain(&z).any(|t| !t.is_finite()) {
            return Err(Error::InvalidInput(format!("NA point needs finite coordinates and a > 0, got a={a}")));
        }
        Ok(Self { v, z, a })
    }

    pub fn identity(m: usize, k: usize) -> Self {
        Self { v: vec![0.0; m], z: vec![0.0; k], a: 1.0 }
    }

    fn check(&self, s: &HTypeStructure) -> Result<()> {
        if self.v.len() != s.m() {
            return Err(Error::DimensionMismatch { expected: s.m(), got: self.v.len() });
        }
        if self.z.len() != s.k() {
            return Err(Error::DimensionMismatch { expected: s.k(), got: self.z.len() });
        }
        Ok(())
    }

    /// Max-norm distance between coordinate vectors.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.v
            .iter()
            .zip(&other.v)
            .chain(self.z.iter().zip(&other.z))
            .map(|(x, y)| (x - y).abs())
            .fold((self.a - other.a).abs(), f64::max)
    }
}

/// (V,Z,a)(V',Z',a') = (V + a^{1/2}V', Z + aZ' + ½a^{1/2}[V,V'], aa').
pub fn group_mul(x: &NAPoint, y: &NAPoint, s: &HTypeStructure) -> Result<NAPoint> {
    x.check(s)?;
    y.check(s)?;
    let sa = x.a.sqrt();
    let br = s.bracket(&x.v, &y.v);
    Ok(NAPoint {
        v: x.v.iter().zip(&y.v).map(|(p, q)| p + sa * q).collect(),
        z: x.z.iter().zip(&y.z).zip(&br).map(|((p, q), b)| p + x.a * q + 0.5 * sa * b).collect(),
        a: x.a * y.a,
    })
}

/// (-a^{-1/2}V, -a^{-1}Z, a^{-1}).
pub fn group_inv(x: &NAPoint) -> NAPoint {
    let sa = x.a.sqrt();
    NAPoint { v: x.v.iter().map(|t| -t / sa).collect(), z: x.z.iter().map(|t| -t / x.a).collect(), a: 1.0 / x.a }
}

/// Geodesic distance from the identity: ρ = log((1+r)/(1-r)) with
/// r² = 1 - 4a/((1+a+|V|²/4)² + |Z|²).
pub fn geodesic_rho(x: &NAPoint) -> f64 {
    let s = norm_sqr(&x.v) / 4.0;
    let zz = norm_sqr(&x.z);
    let d = (1.0 + x.a + s).powi(2) + zz;
    let gap = (1.0 - x.a).powi(2) + 2.0 * s * (1.0 + x.a) + s * s + zz;
    assert!(gap <= d, "r must stay below 1");
    let r = (gap / d).sqrt();
    // log((1+r)/(1-r)) = 2 log(1+r) + log(d/(4a)), exact in r → 1.
    if r < 0.5 {
        2.0 * r.atanh()
    } else {
        2.0 * r.ln_1p() + (d / (4.0 * x.a)).ln()
    }
}

/// d(x, y) = ρ(x⁻¹y).
pub fn distance(x: &NAPoint, y: &NAPoint, s: &HTypeStructure) -> Result<f64> {
    Ok(geodesic_rho(&group_mul(&group_inv(x), y, s)?))
}

/// Geodesic inversion σ(V,Z,t) = ((-(t+|V|²/4) + J_Z)V, -Z, t) / ((t+|V|²/4)² + |Z|²).
pub fn geodesic_inversion(x: &NAPoint, s: &HTypeStructure) -> Result<NAPoint> {
    x.check(s)?;
    let u = x.a + norm_sqr(&x.v) / 4.0;
    let den = u * u + norm_sqr(&x.z);
    if den == 0.0 || !den.is_finite() {
        return Err(Error::SingularPoint(format!("geodesic inversion denominator {den}")));
    }
    let jz = s.j_map(&x.z, &x.v);
    Ok(NAPoint {
        v: x.v.iter().zip(&jz).map(|(v, j)| (-u * v + j) / den).collect(),
        z: x.z.iter().map(|t| -t / den).collect(),
        a: x.a / den,
    })
}
