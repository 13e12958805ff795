//! Paley-Wiener certificates for |𝑃_λf(z)| against
//! (1+|λ|)^{-N} e^{(R + d(z,z₀))|Im λ|}.

use super::closed_form::ClosedFormProjector;
use super::function::SO2FiniteFunction;
use crate::disk::{disk_distance, DiskPoint};
use crate::error::Result;
use crate::numerics::{fit_ratios, pw_weight, ComplexGrid, EnvelopeFit, EnvelopeKind};
use num_complex::Complex64;
use rayon::prelude::*;

/// Pole-disc radius excluded from every λ grid.
pub const POLE_DISC_RADIUS: f64 = 0.2;

/// ±i(2k+1) with |2k+1| ≤ im_max + 1 and k ≥ min |n|.
pub fn disk_poles(f: &SO2FiniteFunction, im_max: f64) -> Vec<Complex64> {
    let k0 = f.modes().keys().map(|n| n.unsigned_abs()).min().unwrap_or(0);
    let mut out = Vec::new();
    let mut k = k0;
    while (2 * k + 1) as f64 <= im_max + 1.0 {
        out.push(Complex64::new(0.0, (2 * k + 1) as f64));
        out.push(Complex64::new(0.0, -((2 * k + 1) as f64)));
        k += 1;
    }
    out
}

/// |𝑃_λf(z)| on the grid minus pole discs, in grid order.
pub fn projection_magnitudes(
    f: &SO2FiniteFunction,
    grid: &ComplexGrid,
    z: &DiskPoint,
) -> Result<Vec<(Complex64, f64)>> {
    let im_max = grid.im_points().iter().fold(0.0f64, |m, y| m.max(y.abs()));
    let pts = grid.points_excluding(&disk_poles(f, im_max), POLE_DISC_RADIUS);
    let projectors: Vec<ClosedFormProjector> =
        f.modes().keys().map(|&n| ClosedFormProjector::new(&f.mode(n)?, n)).collect::<Result<_>>()?;
    pts.par_iter()
        .map(|&l| {
            let mut v = Complex64::new(0.0, 0.0);
            for p in &projectors {
                v += p.value(l, z)?;
            }
            Ok((l, v.norm()))
        })
        .collect()
}

/// One certificate per order, sharing the projection samples.
pub fn pw_envelope_disk_orders(
    f: &SO2FiniteFunction,
    grid: &ComplexGrid,
    orders: &[i32],
    z: &DiskPoint,
) -> Result<Vec<EnvelopeFit>> {
    let mags = projection_magnitudes(f, grid, z)?;
    let exponent = f.radius() + disk_distance(z.z(), f.center())?;
    orders
        .iter()
        .map(|&n| fit_ratios(n, mags.iter().map(|&(l, v)| (v, pw_weight(EnvelopeKind::Linear, l, n, exponent)))))
        .collect()
}

pub fn pw_envelope_disk(f: &SO2FiniteFunction, grid: &ComplexGrid, order: i32, z: &DiskPoint) -> Result<EnvelopeFit> {
    Ok(pw_envelope_disk_orders(f, grid, &[order], z)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_function_certificate() {
        let f = SO2FiniteFunction::zero(1.0).unwrap();
        let g = ComplexGrid::from_ranges((-4.0, 4.0, 1.0), (-2.0, 2.0, 0.5)).unwrap();
        let fit = pw_envelope_disk(&f, &g, 2, &DiskPoint::origin()).unwrap();
        assert_eq!(fit.fitted_constant, 0.0);
    }

    #[test]
    fn poles_excluded() {
        let f = SO2FiniteFunction::bump_mode(1, 1.0).unwrap();
        let poles = disk_poles(&f, 3.0);
        assert_eq!(poles, vec![Complex64::new(0.0, 3.0), Complex64::new(0.0, -3.0)]);
        let g = ComplexGrid::from_ranges((-1.0, 1.0, 0.5), (-3.0, 3.0, 0.25)).unwrap();
        let mags = projection_magnitudes(&f, &g, &DiskPoint::origin()).unwrap();
        assert!(mags.iter().all(|(l, v)| (l - poles[0]).norm() > POLE_DISC_RADIUS && v.is_finite()));
    }

    #[test]
    fn certificates_finite_for_orders() {
        let f = SO2FiniteFunction::bump_mode(1, 1.0).unwrap();
        let g = ComplexGrid::from_ranges((-12.0, 12.0, 1.0), (-3.0, 3.0, 0.5)).unwrap();
        let z = DiskPoint::from_polar(0.5, 0.0).unwrap();
        let fits = pw_envelope_disk_orders(&f, &g, &[1, 2, 3, 4], &z).unwrap();
        assert!(fits.iter().all(|e| e.fitted_constant.is_finite() && e.fitted_constant > 0.0));
    }
}
