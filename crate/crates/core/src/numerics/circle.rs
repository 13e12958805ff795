//! Normalized circle averages (1/2π)∫₀^{2π} f(θ) dθ.

use num_complex::Complex64;
use std::f64::consts::TAU;

/// Trapezoid average at θ_j = 2πj/n; exact on trigonometric polynomials of
/// degree < n/2.
pub fn integrate_circle<F: Fn(f64) -> Complex64>(f: F, n_points: usize) -> Complex64 {
    assert!(n_points >= 8, "integrate_circle needs at least 8 points");
    let s: Complex64 = (0..n_points).map(|j| f(TAU * j as f64 / n_points as f64)).sum();
    s / n_points as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_orthogonality() {
        assert!((integrate_circle(|_| Complex64::new(1.0, 0.0), 8) - 1.0).norm() < 1e-15);
        for n in 1..16 {
            let v = integrate_circle(|t| Complex64::from_polar(1.0, n as f64 * t), 32);
            assert!(v.norm() < 1e-14);
        }
        let v = integrate_circle(|t| Complex64::new(t.cos().powi(2), 0.0), 16);
        assert!((v.re - 0.5).abs() < 1e-15);
    }
}
