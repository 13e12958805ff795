//! Rectangular grids in the complex λ-plane.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexGrid {
    re_points: Vec<f64>,
    im_points: Vec<f64>,
}

/// Inclusive arithmetic progression; the last point is `max` when it falls
/// within a 1e-9 step of the lattice.
pub fn range_inclusive(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(max >= min) || !min.is_finite() || !max.is_finite() {
        return Err(Error::InvalidInput(format!("bad range [{min}, {max}] step {step}")));
    }
    let n = ((max - min) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| min + step * i as f64).collect())
}

impl ComplexGrid {
    pub fn new(re_points: Vec<f64>, im_points: Vec<f64>) -> Result<Self> {
        for (name, v) in [("re", &re_points), ("im", &im_points)] {
            if v.is_empty() {
                return Err(Error::InvalidInput(format!("grid {name} axis is empty")));
            }
            if !v.windows(2).all(|w| w[0] < w[1]) || v.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput(format!("grid {name} axis must be strictly increasing")));
            }
        }
        Ok(Self { re_points, im_points })
    }

    pub fn from_ranges(re: (f64, f64, f64), im: (f64, f64, f64)) -> Result<Self> {
        Self::new(range_inclusive(re.0, re.1, re.2)?, range_inclusive(im.0, im.1, im.2)?)
    }

    /// Re λ ∈ [-12, 12] step 0.5, Im λ ∈ [-3, 3] step 0.25.
    pub fn default_envelope() -> Self {
        Self::from_ranges((-12.0, 12.0, 0.5), (-3.0, 3.0, 0.25)).expect("static grid")
    }

    pub fn re_points(&self) -> &[f64] {
        &self.re_points
    }

    pub fn im_points(&self) -> &[f64] {
        &self.im_points
    }

    pub fn len(&self) -> usize {
        self.re_points.len() * self.im_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All points, imaginary index outer, real index inner.
    pub fn points(&self) -> Vec<Complex64> {
        self.im_points.iter().flat_map(|&y| self.re_points.iter().map(move |&x| Complex64::new(x, y))).collect()
    }

    /// Points at distance ≥ `radius` from every listed pole.
    pub fn points_excluding(&self, poles: &[Complex64], radius: f64) -> Vec<Complex64> {
        self.points().into_iter().filter(|l| poles.iter().all(|p| (l - p).norm() >= radius)).collect()
    }
}
