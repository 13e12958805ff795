//! Distance, horocycle bracket, Poisson powers, measure and Laplacians.

use super::point::{to_cartesian, BoundaryPoint, DiskPoint};
use crate::error::{Error, Result};
use crate::numerics::{laplacian_fd, Geometry, StencilPoint};
use num_complex::Complex64;

/// Crossover radius below which polar stencils switch to Cartesian form.
pub const POLAR_CROSSOVER: f64 = 0.05;

fn check_interior(z: Complex64) -> Result<()> {
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("point {z} is not in the open unit disk")))
    }
}

/// d(z₁, z₂) = artanh |(z₁ - z₂)/(1 - z̄₂ z₁)|, so d(0, tanh r·e^{iθ}) = r.
pub fn disk_distance(z1: Complex64, z2: Complex64) -> Result<f64> {
    check_interior(z1)?;
    check_interior(z2)?;
    Ok(((z1 - z2) / (1.0 - z2.conj() * z1)).norm().min(1.0).atanh())
}

/// Isometry sending 0 to `z0`: z ↦ (z + z₀)/(1 + z̄₀ z).
pub fn mobius_from_origin(z0: Complex64, z: Complex64) -> Complex64 {
    (z + z0) / (1.0 + z0.conj() * z)
}

/// Inverse of [`mobius_from_origin`]: z ↦ (z - z₀)/(1 - z̄₀ z).
pub fn mobius_to_origin(z0: Complex64, z: Complex64) -> Complex64 {
    (z - z0) / (1.0 - z0.conj() * z)
}

/// ⟨z, w⟩ = ½ log((1 - |z|²)/|1 - z w̄|²).
pub fn horocycle_bracket(z: &DiskPoint, w: &BoundaryPoint) -> f64 {
    let d = (1.0 - z.z() * w.w().conj()).norm_sqr();
    0.5 * (z.one_minus_norm_sqr().ln() - d.ln())
}

/// 𝒫_λ(z, w) = e^{(iλ+1)⟨z,w⟩}.
pub fn poisson_power_disk(z: &DiskPoint, w: &BoundaryPoint, lambda: Complex64) -> Complex64 {
    ((Complex64::i() * lambda + 1.0) * horocycle_bracket(z, w)).exp()
}

/// (1 - |z|²)^{-2}: density of dμ against dx dy.
pub fn measure_weight_cartesian(z: Complex64) -> f64 {
    (1.0 - z.norm_sqr()).powi(-2)
}

/// ½ sinh 2r: density of dμ against dr dθ.
pub fn measure_weight_polar(r: f64) -> f64 {
    0.5 * (2.0 * r).sinh()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaplacianForm {
    /// (1 - |z|²)² Δ_{ℝ²}
    Cartesian,
    /// ∂²_r + 2 coth(2r) ∂_r + 4 sinh^{-2}(2r) ∂²_θ
    Polar,
}

/// Δ_D applied by central differences with step `h`.
pub fn laplacian_disk_apply<F>(field: F, z: Complex64, h: f64, form: LaplacianForm) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    check_interior(z)?;
    let (r, theta) = super::point::to_polar(z)?;
    if form == LaplacianForm::Cartesian || r < POLAR_CROSSOVER {
        let g = Geometry::Euclidean2d { bound: Some(1.0) };
        let f = |p: StencilPoint| match p {
            StencilPoint::Plane(w) => field(w),
            StencilPoint::Radius(x) => field(Complex64::new(x, 0.0)),
        };
        let lap = laplacian_fd(f, StencilPoint::Plane(z), h, &g)?;
        return Ok((1.0 - z.norm_sqr()).powi(2) * lap);
    }
    if r - h <= 0.0 {
        return Err(Error::Domain(format!("polar stencil at r={r} with h={h} crosses the origin")));
    }
    let at = |rr: f64, tt: f64| -> Result<Complex64> { Ok(field(to_cartesian(rr, tt)?)) };
    let f0 = at(r, theta)?;
    let (fp, fm) = (at(r + h, theta)?, at(r - h, theta)?);
    let (gp, gm) = (at(r, theta + h)?, at(r, theta - h)?);
    let s2 = (2.0 * r).sinh();
    Ok((fp - 2.0 * f0 + fm) / (h * h)
        + 2.0 / (2.0 * r).tanh() * (fp - fm) / (2.0 * h)
        + 4.0 / (s2 * s2) * (gp - 2.0 * f0 + gm) / (h * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::observed_orders;

    #[test]
    fn distance_anchor_and_symmetry() {
        let z = to_cartesian(1.3, 0.7).unwrap();
        assert!((disk_distance(Complex64::new(0.0, 0.0), z).unwrap() - 1.3).abs() < 1e-13);
        let w = Complex64::new(-0.2, 0.5);
        assert!((disk_distance(z, w).unwrap() - disk_distance(w, z).unwrap()).abs() < 1e-14);
        assert!(disk_distance(Complex64::new(1.0, 0.0), w).is_err());
    }

    #[test]
    fn bracket_values() {
        let w = BoundaryPoint::new(0.3);
        assert_eq!(horocycle_bracket(&DiskPoint::origin(), &w), 0.0);
        for &r in &[0.2, 1.0, 2.5] {
            let z = DiskPoint::from_polar(r, 0.0).unwrap();
            assert!((horocycle_bracket(&z, &BoundaryPoint::new(0.0)) - r).abs() < 1e-12);
            assert!((horocycle_bracket(&z, &BoundaryPoint::new(std::f64::consts::PI)) + r).abs() < 1e-12);
        }
    }

    #[test]
    fn poisson_power_basics() {
        let w = BoundaryPoint::new(1.1);
        let l = Complex64::new(2.5, 0.0);
        assert_eq!(poisson_power_disk(&DiskPoint::origin(), &w, l), Complex64::new(1.0, 0.0));
        let z = DiskPoint::new(Complex64::new(0.3, -0.4)).unwrap();
        assert!((poisson_power_disk(&z, &w, l).norm() - horocycle_bracket(&z, &w).exp()).abs() < 1e-14);
    }

    #[test]
    fn measure_weights() {
        assert_eq!(measure_weight_polar(0.0), 0.0);
        assert_eq!(measure_weight_cartesian(Complex64::new(0.0, 0.0)), 1.0);
    }

    #[test]
    fn poisson_eigenfunction_both_forms() {
        let w = BoundaryPoint::new(0.4);
        let l = Complex64::new(3.0, 0.5);
        let field = |z: Complex64| poisson_power_disk(&DiskPoint::new(z).unwrap(), &w, l);
        let z = to_cartesian(0.8, 2.0).unwrap();
        let target = -(l * l + 1.0) * field(z);
        for form in [LaplacianForm::Cartesian, LaplacianForm::Polar] {
            let res: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
                .iter()
                .map(|&h| (laplacian_disk_apply(field, z, h, form).unwrap() - target).norm())
                .collect();
            assert!(observed_orders(&res).iter().all(|&o| o >= 1.9), "{form:?} {res:?}");
        }
    }

    #[test]
    fn laplacian_trivial_fields() {
        let z = Complex64::new(0.2, 0.1);
        for form in [LaplacianForm::Cartesian, LaplacianForm::Polar] {
            assert!(laplacian_disk_apply(|_| Complex64::new(2.0, 0.0), z, 1e-3, form).unwrap().norm() < 1e-8);
        }
        let v = laplacian_disk_apply(|z| Complex64::new(z.re, 0.0), z, 1e-3, LaplacianForm::Cartesian).unwrap();
        assert!(v.norm() < 1e-8);
        assert!(laplacian_disk_apply(|z| z, Complex64::new(0.999, 0.0), 1e-2, LaplacianForm::Cartesian).is_err());
    }
}
