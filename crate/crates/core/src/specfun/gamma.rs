//! Complex Gamma function.
//!
//! Lanczos approximation (g = 607/128, 15 terms) on `Re z >= 0.5`, reflection
//! formula elsewhere.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const G: f64 = 607.0 / 128.0;
const COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// True when `z` is exactly a non-positive integer.
pub fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

fn lanczos_ln(z: Complex64) -> Complex64 {
    let zm = z - 1.0;
    let mut acc = Complex64::new(COEF[0], 0.0);
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        acc += c / (zm + i as f64);
    }
    let t = zm + G + 0.5;
    HALF_LN_2PI + (zm + 0.5) * t.ln() - t + acc.ln()
}

/// `sin(pi z)` with reduction of the real part, exact zeros at integers.
fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let x = z.re - n;
    let s = Complex64::new(PI * x, PI * z.im).sin();
    if (n as i64).rem_euclid(2) == 1 {
        -s
    } else {
        s
    }
}

/// Gamma function Γ(z).
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", at: z });
    }
    if z.re < 0.5 {
        let g = lanczos_ln(1.0 - z).exp();
        Ok(PI / (sin_pi(z) * g))
    } else {
        Ok(lanczos_ln(z).exp())
    }
}

/// A logarithm of Γ(z); the imaginary part is defined modulo 2π.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", at: z });
    }
    if z.re < 0.5 {
        Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - lanczos_ln(1.0 - z))
    } else {
        Ok(lanczos_ln(z))
    }
}

/// A logarithm of sin(πz), stable for large |Im z|.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 20.0 {
        return sin_pi(z).ln();
    }
    // sin(πz) = (e^{iπz} - e^{-iπz}) / 2i; keep the dominant exponential.
    let w = Complex64::new(0.0, PI) * z;
    if z.im > 0.0 {
        // dominant: -e^{-iπz} / 2i
        -w + (-(1.0 - (2.0 * w).exp())).ln() - Complex64::new(0.0, 2.0).ln()
    } else {
        w + (1.0 - (-2.0 * w).exp()).ln() - Complex64::new(0.0, 2.0).ln()
    }
}

/// Γ(x) for real x.
pub fn gamma_real(x: f64) -> Result<f64> {
    Ok(gamma_complex(Complex64::new(x, 0.0))?.re)
}

/// Rising factorial (a)_n.
pub fn pochhammer(a: Complex64, n: u32) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}
