//! Compactly supported radial profiles: smooth bumps and sampled splines.

use crate::error::{Error, Result};
use crate::numerics::{composite_gauss, Rule};
use serde::{Deserialize, Serialize};
use std::io::{Read, Write};

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 2 || y.len() != n {
            return Err(Error::InvalidInput("spline needs at least two (x, y) pairs".into()));
        }
        if !x.windows(2).all(|w| w[0] < w[1]) || x.iter().chain(&y).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("spline abscissae must be finite and strictly increasing".into()));
        }
        // Tridiagonal solve for second derivatives with m_0 = m_{n-1} = 0.
        let mut m = vec![0.0; n];
        if n > 2 {
            let mut c = vec![0.0; n];
            let mut d = vec![0.0; n];
            for i in 1..n - 1 {
                let h0 = x[i] - x[i - 1];
                let h1 = x[i + 1] - x[i];
                let rhs = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
                let diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
                c[i] = h1 / diag;
                d[i] = (rhs - h0 * d[i - 1]) / diag;
            }
            for i in (1..n - 1).rev() {
                m[i] = d[i] - c[i] * m[i + 1];
            }
        }
        Ok(Self { x, y, m })
    }

    pub fn knots(&self) -> (&[f64], &[f64]) {
        (&self.x, &self.y)
    }

    /// Value on [x_0, x_{n-1}]; clamps to the end values outside.
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        if t <= self.x[0] {
            return self.y[0];
        }
        if t >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let i = self.x.partition_point(|&v| v <= t) - 1;
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - t) / h;
        let b = (t - self.x[i]) / h;
        a * self.y[i]
            + b * self.y[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RadialProfile {
    /// amplitude · tanh(ρ)^p · exp(-1/(1-(ρ/R)²)) on ρ < R.
    Bump {
        radius: f64,
        tanh_power: u32,
        amplitude: f64,
    },
    /// Spline through samples; zero at and beyond the last knot.
    Sampled(CubicSpline),
    Sum(Vec<(f64, RadialProfile)>),
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    rho: f64,
    value: f64,
}

impl RadialProfile {
    pub fn bump(radius: f64) -> Result<Self> {
        Self::bump_with_power(radius, 0)
    }

    pub fn bump_with_power(radius: f64, tanh_power: u32) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidInput(format!("support radius must be positive, got {radius}")));
        }
        Ok(Self::Bump { radius, tanh_power, amplitude: 1.0 })
    }

    pub fn zero(radius: f64) -> Result<Self> {
        Ok(Self::bump(radius)?.scaled(0.0))
    }

    pub fn from_samples(rho: Vec<f64>, value: Vec<f64>) -> Result<Self> {
        if rho.first().is_some_and(|&r| r < 0.0) {
            return Err(Error::InvalidInput("profile radii must be non-negative".into()));
        }
        Ok(Self::Sampled(CubicSpline::new(rho, value)?))
    }

    pub fn scaled(self, s: f64) -> Self {
        match self {
            Self::Bump { radius, tanh_power, amplitude } => Self::Bump { radius, tanh_power, amplitude: amplitude * s },
            other => Self::Sum(vec![(s, other)]),
        }
    }

    pub fn support_radius(&self) -> f64 {
        match self {
            Self::Bump { radius, .. } => *radius,
            Self::Sampled(s) => *s.knots().0.last().expect("non-empty spline"),
            Self::Sum(parts) => parts.iter().map(|(_, p)| p.support_radius()).fold(0.0, f64::max),
        }
    }

    pub fn eval(&self, rho: f64) -> f64 {
        match self {
            Self::Bump { radius, tanh_power, amplitude } => {
                let u = rho / radius;
                if rho.abs() >= *radius || *amplitude == 0.0 {
                    0.0
                } else {
                    amplitude * rho.tanh().powi(*tanh_power as i32) * (-1.0 / (1.0 - u * u)).exp()
                }
            }
            Self::Sampled(s) => {
                if rho >= self.support_radius() {
                    0.0
                } else {
                    s.eval(rho)
                }
            }
            Self::Sum(parts) => parts.iter().map(|(c, p)| c * p.eval(rho)).sum(),
        }
    }

    /// Composite Gauss rule on [0, R]: 16 panels × 32 points.
    pub fn quadrature(&self) -> Rule {
        composite_gauss(0.0, self.support_radius(), 16, 32)
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["rho", "value"] {
            return Err(Error::InvalidInput(format!("profile CSV header must be `rho,value`, got {headers:?}")));
        }
        let (mut rho, mut value) = (Vec::new(), Vec::new());
        for row in rdr.deserialize() {
            let row: CsvRow = row?;
            rho.push(row.rho);
            value.push(row.value);
        }
        Self::from_samples(rho, value)
    }

    /// Writes `n` equally spaced samples on [0, R].
    pub fn write_csv<W: Write>(&self, writer: W, n: usize) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let r = self.support_radius();
        let n = n.max(2);
        for i in 0..n {
            let rho = r * i as f64 / (n - 1) as f64;
            w.serialize(CsvRow { rho, value: self.eval(rho) })?;
        }
        w.flush()?;
        Ok(())
    }
}
