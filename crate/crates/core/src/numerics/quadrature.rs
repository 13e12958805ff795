//! One-dimensional integration: adaptive Gauss-Kronrod (7/15) and
//! trapezoid refinement for periodic integrands.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureMethod {
    AdaptiveGauss,
    PeriodicTrapezoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub method: QuadratureMethod,
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Interval budget (adaptive) or number of doublings (trapezoid).
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(method: QuadratureMethod, abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 {
            return Err(Error::InvalidInput("quadrature tolerances must be positive and max_subdivisions >= 1".into()));
        }
        Ok(Self { method, abs_tol, rel_tol, max_subdivisions })
    }

    pub fn adaptive(abs_tol: f64, rel_tol: f64) -> Self {
        Self { method: QuadratureMethod::AdaptiveGauss, abs_tol, rel_tol, max_subdivisions: 500 }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self::adaptive(1e-12, 1e-12)
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let s = f(center - dx) + f(center + dx);
        k += s * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    let value = k * half;
    Panel { lo, hi, value, error: ((k - g) * half).norm() }
}

/// ∫_lo^hi f(r) dr.
pub fn integrate_radial<F: Fn(f64) -> Complex64>(f: F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    if !(lo <= hi) {
        return Err(Error::InvalidInput(format!("integration bounds out of order: [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(Complex64::new(0.0, 0.0));
    }
    match spec.method {
        QuadratureMethod::AdaptiveGauss => adaptive(&f, lo, hi, spec),
        QuadratureMethod::PeriodicTrapezoid => trapezoid(&f, lo, hi, spec),
    }
}

fn sum_in_order(panels: &mut [Panel]) -> (Complex64, f64) {
    panels.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    panels.iter().fold((Complex64::new(0.0, 0.0), 0.0), |(v, e), p| (v + p.value, e + p.error))
}

fn adaptive<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let mut panels = vec![kronrod(f, lo, hi)];
    loop {
        let (value, error) = sum_in_order(&mut panels);
        if error <= spec.abs_tol.max(spec.rel_tol * value.norm()) {
            return Ok(value);
        }
        if panels.len() >= spec.max_subdivisions {
            return Err(Error::ToleranceNotMet { estimate: value, error_bound: error });
        }
        // Worst panel; ties go to the leftmost.
        let worst =
            panels.iter().enumerate().fold(0, |best, (i, p)| if p.error > panels[best].error { i } else { best });
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        if !(mid > p.lo && mid < p.hi) {
            return Err(Error::ToleranceNotMet { estimate: value, error_bound: error });
        }
        panels.push(kronrod(f, p.lo, mid));
        panels.push(kronrod(f, mid, p.hi));
    }
}

fn trapezoid<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let width = hi - lo;
    let mut n = 16usize;
    let mut sum: Complex64 = (0..n).map(|j| f(lo + width * j as f64 / n as f64)).sum();
    let mut prev = sum * (width / n as f64);
    for _ in 0..spec.max_subdivisions {
        let odd: Complex64 = (0..n).map(|j| f(lo + width * (2 * j + 1) as f64 / (2 * n) as f64)).sum();
        sum += odd;
        n *= 2;
        let cur = sum * (width / n as f64);
        let diff = (cur - prev).norm();
        if diff <= spec.abs_tol.max(spec.rel_tol * cur.norm()) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::ToleranceNotMet { estimate: prev, error_bound: f64::INFINITY })
}
