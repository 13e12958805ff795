use crate::disk::{mobius_to_origin, to_polar, DiskPoint};
use crate::error::{Error, Result};
use crate::numerics::composite_gauss;
use crate::profile::RadialProfile;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{Read, Write};

/// Complex radial profile of one angular mode, indexed by geodesic radius.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeProfile {
    pub re: RadialProfile,
    pub im: Option<RadialProfile>,
}

impl ModeProfile {
    pub fn real(re: RadialProfile) -> Self {
        Self { re, im: None }
    }

    pub fn eval(&self, r: f64) -> Complex64 {
        Complex64::new(self.re.eval(r), self.im.as_ref().map_or(0.0, |p| p.eval(r)))
    }

    pub fn support_radius(&self) -> f64 {
        self.im.as_ref().map_or(0.0, |p| p.support_radius()).max(self.re.support_radius())
    }
}

/// f(τ(tanh r·e^{iθ})) = Σ_n f_n(r) e^{inθ} with τ(z) = (z + z₀)/(1 + z̄₀z),
/// every f_n vanishing for r ≥ R.
#[derive(Debug, Clone, PartialEq)]
pub struct SO2FiniteFunction {
    modes: BTreeMap<i32, ModeProfile>,
    radius: f64,
    center: Complex64,
}

#[derive(Serialize, Deserialize)]
struct JsonSample {
    r: f64,
    value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value_im: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct JsonMode {
    n: i32,
    samples: Vec<JsonSample>,
}

#[derive(Serialize, Deserialize)]
struct JsonFunction {
    #[serde(rename = "R")]
    radius: f64,
    #[serde(default)]
    z0: [f64; 2],
    modes: Vec<JsonMode>,
}

type Terms = Vec<(f64, RadialProfile)>;

impl SO2FiniteFunction {
    pub fn new(modes: BTreeMap<i32, ModeProfile>, radius: f64, center: Complex64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidInput(format!("support radius must be positive, got {radius}")));
        }
        if !(center.norm() < 1.0) {
            return Err(Error::Domain(format!("center {center} is not in the open unit disk")));
        }
        if let Some((n, m)) = modes.iter().find(|(_, m)| m.support_radius() > radius * (1.0 + 1e-12)) {
            return Err(Error::InvalidInput(format!(
                "mode {n} has support radius {} beyond R = {radius}",
                m.support_radius()
            )));
        }
        Ok(Self { modes, radius, center })
    }

    /// tanh(r)^{|n|} · exp(-1/(1-(r/R)²)) e^{inθ} centered at the origin.
    pub fn bump_mode(n: i32, radius: f64) -> Result<Self> {
        let p = RadialProfile::bump_with_power(radius, n.unsigned_abs())?;
        Self::new(BTreeMap::from([(n, ModeProfile::real(p))]), radius, Complex64::new(0.0, 0.0))
    }

    pub fn zero(radius: f64) -> Result<Self> {
        Self::new(BTreeMap::new(), radius, Complex64::new(0.0, 0.0))
    }

    pub fn with_center(mut self, center: Complex64) -> Result<Self> {
        if !(center.norm() < 1.0) {
            return Err(Error::Domain(format!("center {center} is not in the open unit disk")));
        }
        self.center = center;
        Ok(self)
    }

    pub fn modes(&self) -> &BTreeMap<i32, ModeProfile> {
        &self.modes
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    /// Single-mode restriction.
    pub fn mode(&self, n: i32) -> Result<Self> {
        let m = self.modes.get(&n).cloned().into_iter().map(|m| (n, m)).collect();
        Self::new(m, self.radius, self.center)
    }

    /// Polar coordinates of τ^{-1}(z).
    pub fn local_polar(&self, z: &DiskPoint) -> Result<(f64, f64)> {
        if self.center == Complex64::new(0.0, 0.0) {
            return Ok((z.r(), z.theta()));
        }
        to_polar(mobius_to_origin(self.center, z.z()))
    }

    pub fn eval(&self, z: &DiskPoint) -> Result<Complex64> {
        let (r, theta) = self.local_polar(z)?;
        Ok(self.eval_local(r, theta))
    }

    pub fn eval_local(&self, r: f64, theta: f64) -> Complex64 {
        self.modes.iter().map(|(&n, p)| p.eval(r) * Complex64::from_polar(1.0, n as f64 * theta)).sum()
    }

    /// Mode-0 restriction; equals the θ-average about the center.
    pub fn radialize(&self) -> Self {
        self.mode(0).expect("restriction of a valid function")
    }

    /// ∫_D |f|² dμ = Σ_n 2π ∫₀^R |f_n(r)|² ½ sinh(2r) dr.
    pub fn l2_norm_sqr(&self) -> f64 {
        let rule = composite_gauss(0.0, self.radius, 16, 32);
        self.modes
            .values()
            .map(|p| std::f64::consts::TAU * rule.apply(|r| p.eval(r).norm_sqr() * 0.5 * (2.0 * r).sinh()))
            .sum()
    }

    /// Superposition Σ cᵢ fᵢ of functions sharing a center.
    pub fn linear_combination(parts: &[(f64, &Self)]) -> Result<Self> {
        let center = parts.first().map_or(Complex64::new(0.0, 0.0), |(_, f)| f.center);
        if parts.iter().any(|(_, f)| f.center != center) {
            return Err(Error::InvalidInput("superposed functions must share a center".into()));
        }
        let radius = parts.iter().fold(0.0f64, |m, (_, f)| m.max(f.radius));
        let mut acc: BTreeMap<i32, (Terms, Terms)> = BTreeMap::new();
        for (c, f) in parts {
            for (&n, p) in &f.modes {
                let e = acc.entry(n).or_default();
                e.0.push((*c, p.re.clone()));
                if let Some(im) = &p.im {
                    e.1.push((*c, im.clone()));
                }
            }
        }
        let modes = acc
            .into_iter()
            .map(|(n, (re, im))| {
                let im = (!im.is_empty()).then_some(RadialProfile::Sum(im));
                (n, ModeProfile { re: RadialProfile::Sum(re), im })
            })
            .collect();
        Self::new(modes, radius, center)
    }

    pub fn read_json<R: Read>(reader: R) -> Result<Self> {
        let j: JsonFunction = serde_json::from_reader(reader)?;
        let mut modes = BTreeMap::new();
        for m in j.modes {
            let r: Vec<f64> = m.samples.iter().map(|s| s.r).collect();
            let re = RadialProfile::from_samples(r.clone(), m.samples.iter().map(|s| s.value).collect())?;
            let im = if m.samples.iter().any(|s| s.value_im.is_some()) {
                Some(RadialProfile::from_samples(r, m.samples.iter().map(|s| s.value_im.unwrap_or(0.0)).collect())?)
            } else {
                None
            };
            if modes.insert(m.n, ModeProfile { re, im }).is_some() {
                return Err(Error::InvalidInput(format!("mode {} listed twice", m.n)));
            }
        }
        Self::new(modes, j.radius, Complex64::new(j.z0[0], j.z0[1]))
    }

    /// Each mode sampled at `n` equally spaced radii on [0, R].
    pub fn write_json<W: Write>(&self, writer: W, n: usize) -> Result<()> {
        let n = n.max(2);
        let modes = self
            .modes
            .iter()
            .map(|(&k, p)| JsonMode {
                n: k,
                samples: (0..n)
                    .map(|i| {
                        let r = self.radius * i as f64 / (n - 1) as f64;
                        let v = p.eval(r);
                        JsonSample { r, value: v.re, value_im: p.im.as_ref().map(|_| v.im) }
                    })
                    .collect(),
            })
            .collect();
        let j = JsonFunction { radius: self.radius, z0: [self.center.re, self.center.im], modes };
        serde_json::to_writer_pretty(writer, &j)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_mode_values() {
        let f = SO2FiniteFunction::bump_mode(2, 1.0).unwrap();
        let z = DiskPoint::from_polar(0.5, 0.3).unwrap();
        let expect = 0.5f64.tanh().powi(2) * (-1.0 / 0.75f64).exp() * Complex64::from_polar(1.0, 0.6);
        assert!((f.eval(&z).unwrap() - expect).norm() < 1e-15);
        assert_eq!(f.eval(&DiskPoint::from_polar(1.2, 0.0).unwrap()).unwrap(), Complex64::new(0.0, 0.0));
        assert!(f.radialize().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f = SO2FiniteFunction::bump_mode(1, 1.0).unwrap();
        let mut buf = Vec::new();
        f.write_json(&mut buf, 401).unwrap();
        let g = SO2FiniteFunction::read_json(buf.as_slice()).unwrap();
        assert_eq!(g.radius(), 1.0);
        for &(r, t) in &[(0.2, 0.1), (0.6, 2.0), (0.9, 4.0)] {
            let z = DiskPoint::from_polar(r, t).unwrap();
            assert!((f.eval(&z).unwrap() - g.eval(&z).unwrap()).norm() < 1e-6);
        }
        let bad = r#"{"R": 1.0, "modes": [{"n": 0, "samples": [{"r": 0.0, "value": 1.0}, {"r": 2.0, "value": 0.0}]}]}"#;
        assert!(SO2FiniteFunction::read_json(bad.as_bytes()).is_err());
    }

    #[test]
    fn centered_translation() {
        let c = Complex64::new(0.3, 0.1);
        let f = SO2FiniteFunction::bump_mode(0, 0.5).unwrap().with_center(c).unwrap();
        let at_c = f.eval(&DiskPoint::new(c).unwrap()).unwrap();
        assert!((at_c.re - (-1.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn norm_of_radial_bump() {
        let f = SO2FiniteFunction::bump_mode(0, 1.0).unwrap();
        let direct = crate::numerics::integrate_radial(
            |r| Complex64::new(std::f64::consts::TAU * (-2.0 / (1.0 - r * r)).exp() * 0.5 * (2.0 * r).sinh(), 0.0),
            0.0,
            1.0,
            &Default::default(),
        )
        .unwrap();
        assert!((f.l2_norm_sqr() - direct.re).abs() < 1e-12 * direct.re);
    }
}
