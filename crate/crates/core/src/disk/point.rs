use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Point of the open unit disk, z = tanh(r) e^{iθ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    z: Complex64,
    r: f64,
    theta: f64,
    /// 1 - |z|², kept exact when built from polar data.
    gap: f64,
}

fn wrap_angle(t: f64) -> f64 {
    let w = t.rem_euclid(TAU);
    if w == TAU {
        0.0
    } else {
        w
    }
}

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        let (r, theta) = to_polar(z)?;
        let a = z.norm();
        Ok(Self { z, r, theta, gap: (1.0 - a) * (1.0 + a) })
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        let z = to_cartesian(r, theta)?;
        Ok(Self { z, r, theta: wrap_angle(theta), gap: 1.0 / r.cosh().powi(2) })
    }

    pub fn origin() -> Self {
        Self { z: Complex64::new(0.0, 0.0), r: 0.0, theta: 0.0, gap: 1.0 }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Geodesic radius d(0, z).
    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// 1 - |z|².
    pub fn one_minus_norm_sqr(&self) -> f64 {
        self.gap
    }
}

/// Boundary point e^{iφ}, stored as its angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    angle: f64,
}

impl BoundaryPoint {
    pub fn new(angle: f64) -> Self {
        Self { angle: wrap_angle(angle) }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn w(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle)
    }
}

/// (r, θ) with z = tanh(r)e^{iθ}, θ ∈ [0, 2π).
pub fn to_polar(z: Complex64) -> Result<(f64, f64)> {
    let a = z.norm();
    if !(a < 1.0) {
        return Err(Error::Domain(format!("point {z} is not in the open unit disk")));
    }
    if a == 0.0 {
        return Ok((0.0, 0.0));
    }
    Ok((a.atanh(), wrap_angle(z.arg())))
}

pub fn to_cartesian(r: f64, theta: f64) -> Result<Complex64> {
    if !(r >= 0.0) || !theta.is_finite() {
        return Err(Error::Domain(format!("polar coordinates need r >= 0, got r={r}")));
    }
    let t = r.tanh();
    if !(t < 1.0) {
        return Err(Error::Domain(format!("radius {r} rounds onto the boundary")));
    }
    Ok(Complex64::from_polar(t, theta))
}
