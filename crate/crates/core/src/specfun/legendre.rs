//! Legendre functions of the first kind P_ν(x), x ≥ 1.

use super::hyp2f1::hyp2f1;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// P_ν(x) = ₂F₁(-ν, ν+1; 1; (1-x)/2).
pub fn legendre_p(nu: Complex64, x: f64) -> Result<Complex64> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("legendre_p needs x >= 1, got {x}")));
    }
    if x == 1.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    hyp2f1(-nu, nu + 1.0, Complex64::new(1.0, 0.0), 0.5 * (1.0 - x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn trivial_values() {
        let nu = Complex64::new(0.3, 2.0);
        assert_eq!(legendre_p(nu, 1.0).unwrap(), Complex64::new(1.0, 0.0));
        for &x in &[1.0, 1.5, 40.0] {
            assert!((legendre_p(Complex64::new(0.0, 0.0), x).unwrap() - 1.0).norm() < 1e-15);
        }
        assert!(legendre_p(nu, 0.99).is_err());
    }

    #[test]
    fn integer_degrees_are_polynomials() {
        for &x in &[1.2, 3.0, 10.0] {
            let p2 = legendre_p(Complex64::new(2.0, 0.0), x).unwrap();
            assert!((p2.re - 0.5 * (3.0 * x * x - 1.0)).abs() < 1e-12 * x * x);
            let p3 = legendre_p(Complex64::new(3.0, 0.0), x).unwrap();
            assert!((p3.re - 0.5 * (5.0 * x.powi(3) - 3.0 * x)).abs() < 1e-12 * x.powi(3));
        }
    }

    #[test]
    fn mehler_quadrature() {
        // ∫₀^π (cosh 2r - sinh 2r cos θ)^{-1/2+iλ/2} dθ = π·P_{-(1+iλ)/2}(cosh 2r)
        let n = 4000;
        for &(l, r) in &[(0.5f64, 0.3f64), (3.0, 1.0), (8.0, 2.0)] {
            let (ch, sh) = ((2.0 * r).cosh(), (2.0 * r).sinh());
            let e = Complex64::new(-0.5, 0.5 * l);
            // Midpoint rule on [0, π] of a smooth even periodic integrand.
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let th = PI * (j as f64 + 0.5) / n as f64;
                s += Complex64::new(ch - sh * th.cos(), 0.0).powc(e);
            }
            s *= PI / n as f64;
            let p = legendre_p(Complex64::new(-0.5, -0.5 * l), ch).unwrap();
            assert!((s - PI * p).norm() < 1e-10 * p.norm().max(1e-6), "λ={l} r={r}");
        }
    }
}
