//! Left Haar measure a^{-Q-1} dV dZ da versus the radial measure A(ρ)dρ.

use super::group::{geodesic_rho, NAPoint};
use super::params::NAParams;
use super::spherical::radial_density;
use crate::error::Result;
use crate::numerics::composite_gauss;
use crate::profile::RadialProfile;
use crate::specfun::gamma_real;
use std::f64::consts::PI;

fn sphere_area(dim: u32) -> Result<f64> {
    let d = dim as f64;
    Ok(2.0 * PI.powf(d / 2.0) / gamma_real(d / 2.0)?)
}

/// ∫_{NA} f(ρ(x)) dx over (log a, |V|, |Z|) coordinates.
pub fn haar_radial_integral(f: &RadialProfile, p: &NAParams) -> Result<f64> {
    let r = f.support_radius();
    let ch = (r / 2.0).cosh();
    let (m, k) = (p.m() as usize, p.k() as usize);
    let area = sphere_area(p.m())? * sphere_area(p.k())?;
    let q = p.q();
    let ru = composite_gauss(-r, r, 8, 16);
    let mut total = 0.0;
    for (&u, &wu) in ru.nodes.iter().zip(&ru.weights) {
        let a = u.exp();
        // Support: (1 + a + |V|²/4)² + |Z|² ≤ 4a cosh²(R/2).
        let s_max = 2.0 * a.sqrt() * ch - 1.0 - a;
        if s_max <= 0.0 {
            continue;
        }
        let rv = composite_gauss(0.0, 2.0 * s_max.sqrt(), 4, 16);
        let mut inner_v = 0.0;
        for (&v, &wv) in rv.nodes.iter().zip(&rv.weights) {
            let z2 = 4.0 * a * ch * ch - (1.0 + a + v * v / 4.0).powi(2);
            if z2 <= 0.0 {
                continue;
            }
            let rz = composite_gauss(0.0, z2.sqrt(), 4, 16);
            let mut inner_z = 0.0;
            for (&z, &wz) in rz.nodes.iter().zip(&rz.weights) {
                let mut pv = vec![0.0; m];
                pv[0] = v;
                let mut pz = vec![0.0; k];
                pz[0] = z;
                let x = NAPoint { v: pv, z: pz, a };
                inner_z += wz * f.eval(geodesic_rho(&x)) * z.powi(k as i32 - 1);
            }
            inner_v += wv * inner_z * v.powi(m as i32 - 1);
        }
        // da = a du
        total += wu * inner_v * a.powf(-q);
    }
    Ok(area * total)
}

/// ∫_{NA} f dx / ∫₀^∞ f A dρ; independent of f.
pub fn haar_radial_ratio(f: &RadialProfile, p: &NAParams) -> Result<f64> {
    let radial = f.quadrature().apply(|r| f.eval(r) * radial_density(p, r));
    Ok(haar_radial_integral(f, p)? / radial)
}
