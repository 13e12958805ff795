use super::group::NAPoint;
use super::htype::HTypeStructure;
use super::params::NAParams;
use crate::error::Result;
use num_complex::Complex64;

fn norm_sqr(x: &[f64]) -> f64 {
    x.iter().map(|t| t * t).sum()
}

/// P_a(V, Z) = a^Q ((a + |V|²/4)² + |Z|²)^{-Q}.
pub fn poisson_kernel(a: f64, v: &[f64], z: &[f64], p: &NAParams) -> f64 {
    let q = p.q();
    let d = (a + norm_sqr(v) / 4.0).powi(2) + norm_sqr(z);
    // Logarithmic form keeps large Q from overflowing.
    (q * (a.ln() - d.ln())).exp()
}

/// P(na, n̄)^{1/2 - iλ/Q} with P(na, n̄) = P_a(n̄⁻¹n).
pub fn poisson_power(
    x: &NAPoint,
    nbar: (&[f64], &[f64]),
    lambda: Complex64,
    p: &NAParams,
    s: &HTypeStructure,
) -> Result<Complex64> {
    let probe = NAPoint::new(nbar.0.to_vec(), nbar.1.to_vec(), 1.0)?;
    let shift = super::group::group_mul(&super::group::group_inv(&probe), &NAPoint { a: 1.0, ..x.clone() }, s)?;
    let base = poisson_kernel(x.a, &shift.v, &shift.z, p);
    let e = 0.5 - Complex64::i() * lambda / p.q();
    Ok((e * base.ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_at_origin_and_homogeneity() {
        let p = NAParams::new(2, 1).unwrap();
        for &a in &[0.2, 1.0, 7.0] {
            let v0 = poisson_kernel(a, &[0.0, 0.0], &[0.0], &p);
            assert!((v0 - a.powf(-p.q())).abs() < 1e-14 * v0);
            let (v, z) = ([0.7, -1.3], [0.4]);
            let lhs = poisson_kernel(a, &v, &z, &p);
            let vs: Vec<f64> = v.iter().map(|t| t / a.sqrt()).collect();
            let zs: Vec<f64> = z.iter().map(|t| t / a).collect();
            let rhs = a.powf(-p.q()) * poisson_kernel(1.0, &vs, &zs, &p);
            assert!((lhs - rhs).abs() < 1e-13 * lhs);
        }
        let a = poisson_kernel(1.0, &[0.1, 0.0], &[0.5], &p);
        let b = poisson_kernel(1.0, &[0.1, 0.0], &[0.6], &p);
        assert!(b < a && b > 0.0);
    }

    #[test]
    fn power_special_exponents() {
        let p = NAParams::new(2, 1).unwrap();
        let s = HTypeStructure::heisenberg(2).unwrap();
        let x = NAPoint::new(vec![0.3, 0.8], vec![-0.2], 1.7).unwrap();
        let nb: (&[f64], &[f64]) = (&[1.0, -0.5], &[0.25]);
        let q = p.q();
        let zero = poisson_power(&x, nb, Complex64::new(0.0, -q / 2.0), &p, &s).unwrap();
        assert!((zero - 1.0).norm() < 1e-14);
        let one = poisson_power(&x, nb, Complex64::new(0.0, q / 2.0), &p, &s).unwrap();
        // n̄⁻¹n = (V - V̄, Z - Z̄ - ½[V̄, V])
        let br = s.bracket(nb.0, &x.v);
        let v: Vec<f64> = x.v.iter().zip(nb.0).map(|(a, b)| a - b).collect();
        let z = [x.z[0] - nb.1[0] - 0.5 * br[0]];
        let k = poisson_kernel(x.a, &v, &z, &p);
        assert!((one - k).norm() < 1e-13 * k);
        let real = poisson_power(&x, nb, Complex64::new(2.3, 0.0), &p, &s).unwrap();
        assert!((real.norm() - k.sqrt()).abs() < 1e-13 * k.sqrt());
    }
}
