//! Second-order central-difference Laplacians.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub enum Geometry<'a> {
    /// Δ_{ℝ²} at a point of the plane; when `bound` is set every stencil
    /// point must satisfy |z| < bound.
    Euclidean2d { bound: Option<f64> },
    /// ∂²/∂ρ² + drift(ρ)∂/∂ρ on ρ > 0.
    RadialWithDrift(&'a dyn Fn(f64) -> f64),
}

/// Stencil location: a plane point or a radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StencilPoint {
    Plane(Complex64),
    Radius(f64),
}

pub fn laplacian_fd<F>(field: F, at: StencilPoint, h: f64, geometry: &Geometry<'_>) -> Result<Complex64>
where
    F: Fn(StencilPoint) -> Complex64,
{
    if !(h > 0.0) {
        return Err(Error::InvalidInput(format!("stencil step must be positive, got {h}")));
    }
    match (geometry, at) {
        (Geometry::Euclidean2d { bound }, StencilPoint::Plane(z)) => {
            if let Some(b) = bound {
                if z.norm() + h * std::f64::consts::SQRT_2 >= *b {
                    return Err(Error::Domain(format!("stencil at {z} with h={h} leaves |z| < {b}")));
                }
            }
            let f = |w: Complex64| field(StencilPoint::Plane(w));
            let c = f(z);
            let s = f(z + h) + f(z - h) + f(z + Complex64::new(0.0, h)) + f(z - Complex64::new(0.0, h));
            Ok((s - 4.0 * c) / (h * h))
        }
        (Geometry::RadialWithDrift(drift), StencilPoint::Radius(r)) => {
            if r - h <= 0.0 {
                return Err(Error::Domain(format!("radial stencil at {r} with h={h} reaches ρ <= 0")));
            }
            let f = |x: f64| field(StencilPoint::Radius(x));
            let (fm, f0, fp) = (f(r - h), f(r), f(r + h));
            Ok((fp - 2.0 * f0 + fm) / (h * h) + drift(r) * (fp - fm) / (2.0 * h))
        }
        _ => Err(Error::InvalidInput("stencil point does not match geometry".into())),
    }
}

/// Observed order log₂(e(h)/e(h/2)) for consecutive residuals.
pub fn observed_orders(residuals: &[f64]) -> Vec<f64> {
    residuals.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}
