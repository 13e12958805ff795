//! Meromorphic closed form of 𝑃_λf for a single mode n:
//!   𝑃_λf(z) = 2π γ(λ,n) tanh^{|n|}(r) φ^{(|n|,-|n|)}_λ(r) e^{inθ} I_n(λ),
//!   I_n(λ) = ∫₀^R f_n(s) φ^{(|n|,-|n|)}_λ(s) tanh^{|n|}(s) sinh(2s) ds,
//!   γ(λ,n) = λ sinh(πλ/2) Γ(|n|+(1+iλ)/2) Γ(|n|+(1-iλ)/2) / (8π² |n|!²).
//! Poles sit at ±i(2k+1), k ≥ |n|; zeros at 0 (double) and ±2il.

use super::function::SO2FiniteFunction;
use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::numerics::{composite_gauss, Rule};
use crate::specfun::{gamma_complex, jacobi_phi, jacobi_phi_many, pochhammer, JacobiParams};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;
use std::sync::RwLock;

/// Beyond this |Re λ| γ is evaluated through tanh and Pochhammer symbols.
const GAMMA_FORM_LIMIT: f64 = 20.0;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// k ≥ |n| with λ = ±i(2k+1) exactly, and the sign.
pub fn pole_index(lambda: Complex64, n: i32) -> Option<(u32, i8)> {
    if lambda.re != 0.0 {
        return None;
    }
    let k = (lambda.im.abs() - 1.0) / 2.0;
    (k >= 0.0 && k.fract() == 0.0 && k as u32 >= n.unsigned_abs())
        .then_some((k as u32, if lambda.im > 0.0 { 1 } else { -1 }))
}

pub fn gamma_factor(lambda: Complex64, n: i32) -> Result<Complex64> {
    if pole_index(lambda, n).is_some() {
        return Err(Error::Pole { function: "gamma_factor", at: lambda });
    }
    let m = n.unsigned_abs();
    let nf = factorial(m);
    let half = Complex64::new(0.5, 0.0);
    let il = Complex64::i() * lambda;
    if lambda.re.abs() <= GAMMA_FORM_LIMIT {
        let g1 = gamma_complex(m as f64 + half + il * 0.5)?;
        let g2 = gamma_complex(m as f64 + half - il * 0.5)?;
        Ok(lambda * (PI * lambda / 2.0).sinh() * g1 * g2 / (8.0 * PI * PI * nf * nf))
    } else {
        let p = pochhammer(half + il * 0.5, m) * pochhammer(half - il * 0.5, m);
        Ok(lambda * (PI * lambda / 2.0).tanh() * p / (8.0 * PI * nf * nf))
    }
}

/// Res_{λ=λ_k} γ(λ,n) at λ_k = sign·i(2k+1), k ≥ |n|.
pub fn gamma_factor_residue(n: i32, k: u32, sign: i8) -> Result<Complex64> {
    let m = n.unsigned_abs();
    if k < m {
        return Err(Error::NotAPole { k, n_abs: m });
    }
    let j = k - m;
    let nf = factorial(m);
    let pm = |e: u32| if e.is_multiple_of(2) { 1.0 } else { -1.0 };
    // λ_k sinh(πλ_k/2) = -(2k+1)(-1)^k for either sign.
    let front = -(2.0 * k as f64 + 1.0) * pm(k);
    // Res_λ Γ(|n| + (1 ± iλ)/2) at the vanishing argument -j is ∓2i(-1)^j/j!, the
    // other Gamma equals (|n|+k)!.
    let res = Complex64::new(0.0, -2.0 * sign as f64 * pm(j) / factorial(j));
    Ok(front * res * factorial(m + k) / (8.0 * PI * PI * nf * nf))
}

/// Closed-form evaluator for one mode, caching I_n(λ) by the bits of λ.
pub struct ClosedFormProjector {
    n: i32,
    function: SO2FiniteFunction,
    params: JacobiParams,
    rule: Rule,
    /// w_i · f_n(s_i) tanh^{|n|}(s_i) sinh(2s_i).
    weights: Vec<Complex64>,
    cache: RwLock<HashMap<(u64, u64), Complex64>>,
}

impl std::fmt::Debug for ClosedFormProjector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClosedFormProjector").field("n", &self.n).field("radius", &self.function.radius()).finish()
    }
}

/// Gauss rule for I_n: 512 points on [0, R].
pub fn coefficient_rule(radius: f64) -> Rule {
    composite_gauss(0.0, radius, 16, 32)
}

impl ClosedFormProjector {
    pub fn new(f: &SO2FiniteFunction, n: i32) -> Result<Self> {
        if f.modes().keys().any(|&k| k != n) {
            return Err(Error::InvalidInput(format!("closed form needs a single mode n = {n}")));
        }
        let m = n.unsigned_abs();
        let params = JacobiParams::new(m as f64, -(m as f64))?;
        let rule = coefficient_rule(f.radius());
        let weights = match f.modes().get(&n) {
            Some(p) => rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(&s, &w)| p.eval(s) * (w * s.tanh().powi(m as i32) * (2.0 * s).sinh()))
                .collect(),
            None => vec![Complex64::new(0.0, 0.0); rule.nodes.len()],
        };
        Ok(Self { n, function: f.clone(), params, rule, weights, cache: RwLock::new(HashMap::new()) })
    }

    pub fn mode(&self) -> i32 {
        self.n
    }

    pub fn function(&self) -> &SO2FiniteFunction {
        &self.function
    }

    /// I_n(λ), entire in λ.
    pub fn coefficient(&self, lambda: Complex64) -> Result<Complex64> {
        if self.function.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let key = (lambda.re.to_bits(), lambda.im.to_bits());
        if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(*v);
        }
        let phi = jacobi_phi_many(self.params, lambda, &self.rule.nodes)?;
        let v = phi.iter().zip(&self.weights).map(|(p, w)| p * w).sum();
        self.cache.write().expect("cache lock").entry(key).or_insert(v);
        Ok(v)
    }

    /// tanh^{|n|}(r) φ^{(|n|,-|n|)}_λ(r) e^{inθ} in the local frame of f.
    fn radial_part(&self, lambda: Complex64, z: &DiskPoint) -> Result<Complex64> {
        let (r, t) = self.function.local_polar(z)?;
        let m = self.n.unsigned_abs() as i32;
        Ok(r.tanh().powi(m) * jacobi_phi(self.params, lambda, r)? * Complex64::from_polar(1.0, self.n as f64 * t))
    }

    /// 2π γ(λ,n) · radial part · I_n(λ).
    pub fn value(&self, lambda: Complex64, z: &DiskPoint) -> Result<Complex64> {
        let g = gamma_factor(lambda, self.n)?;
        if self.function.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(2.0 * PI * g * self.radial_part(lambda, z)? * self.coefficient(lambda)?)
    }

    /// 𝑃_λf(z)/[Γ(|n|+(1+iλ)/2)Γ(|n|+(1-iλ)/2)], entire in λ.
    pub fn entire_quotient(&self, lambda: Complex64, z: &DiskPoint) -> Result<Complex64> {
        let nf = factorial(self.n.unsigned_abs());
        let g = lambda * (PI * lambda / 2.0).sinh() / (8.0 * PI * PI * nf * nf);
        Ok(2.0 * PI * g * self.radial_part(lambda, z)? * self.coefficient(lambda)?)
    }

    /// Res_{λ=sign·i(2k+1)} 𝑃_λf(z) from the Gamma residue.
    pub fn residue(&self, k: u32, sign: i8, z: &DiskPoint) -> Result<Complex64> {
        let rg = gamma_factor_residue(self.n, k, sign)?;
        if self.function.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let lk = Complex64::new(0.0, sign as f64 * (2 * k + 1) as f64);
        Ok(2.0 * PI * rg * self.radial_part(lk, z)? * self.coefficient(lk)?)
    }

    /// Constant term of the Laurent expansion at λ_k: the mean of 𝑃_λf over
    /// 8 points of the circle |λ - λ_k| = ε, where the pole term averages to 0.
    pub fn regular_part(&self, k: u32, sign: i8, z: &DiskPoint, eps: f64) -> Result<Complex64> {
        let lk = Complex64::new(0.0, sign as f64 * (2 * k + 1) as f64);
        let mut s = Complex64::new(0.0, 0.0);
        for j in 0..8 {
            s += self.value(lk + Complex64::from_polar(eps, std::f64::consts::TAU * (j as f64 + 0.5) / 8.0), z)?;
        }
        Ok(s / 8.0)
    }
}

pub fn closed_form_projection(f: &SO2FiniteFunction, lambda: Complex64, z: &DiskPoint) -> Result<Complex64> {
    let n = match f.modes().keys().copied().collect::<Vec<_>>()[..] {
        [] => 0,
        [n] => n,
        _ => return Err(Error::InvalidInput("closed form needs a single-mode function".into())),
    };
    ClosedFormProjector::new(f, n)?.value(lambda, z)
}

/// Analytic residue; `NotAPole` for k < |n|, where the limit is 0.
pub fn residue_at_pole(f: &SO2FiniteFunction, n: i32, k: u32, sign: i8, z: &DiskPoint) -> Result<Complex64> {
    ClosedFormProjector::new(&f.mode(n)?, n)?.residue(k, sign, z)
}

/// Lower-half-plane residues are computed independently of the upper ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidueSum {
    pub k_max: u32,
    /// |Σ over λ_k = ±i(2k+1), |n| ≤ k ≤ K, all modes|.
    pub symmetric: f64,
    /// |Σ over λ_k = +i(2k+1) only| after each K' = 0..=K.
    pub upper_partial: Vec<f64>,
}

pub fn residue_sum_check(f: &SO2FiniteFunction, z: &DiskPoint, k_max: u32) -> Result<ResidueSum> {
    let mut sym = Complex64::new(0.0, 0.0);
    let mut upper = vec![Complex64::new(0.0, 0.0); k_max as usize + 1];
    for &n in f.modes().keys() {
        let p = ClosedFormProjector::new(&f.mode(n)?, n)?;
        for k in n.unsigned_abs()..=k_max {
            let up = p.residue(k, 1, z)?;
            sym += up + p.residue(k, -1, z)?;
            upper[k as usize] += up;
        }
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let upper_partial = upper
        .into_iter()
        .map(|u| {
            acc += u;
            acc.norm()
        })
        .collect();
    Ok(ResidueSum { k_max, symmetric: sym.norm(), upper_partial })
}

/// λ ↦ 𝑃_λf(z) for one mode and point, with its declared singular structure.
#[derive(Debug)]
pub struct MeromorphicProfile<'a> {
    pub mode: i32,
    pub point: DiskPoint,
    pub poles: Vec<Complex64>,
    pub zeros: Vec<Complex64>,
    pub residues: BTreeMap<(u32, i8), Complex64>,
    projector: &'a ClosedFormProjector,
}

impl<'a> MeromorphicProfile<'a> {
    /// Poles with k ≤ k_max; zeros ±2il with 1 ≤ l ≤ k_max, and 0 twice.
    pub fn new(projector: &'a ClosedFormProjector, point: DiskPoint, k_max: u32) -> Result<Self> {
        let n = projector.mode();
        let mut poles = Vec::new();
        let mut residues = BTreeMap::new();
        for k in n.unsigned_abs()..=k_max {
            for s in [1i8, -1] {
                poles.push(Complex64::new(0.0, s as f64 * (2 * k + 1) as f64));
                residues.insert((k, s), projector.residue(k, s, &point)?);
            }
        }
        let mut zeros = vec![Complex64::new(0.0, 0.0); 2];
        for l in 1..=k_max {
            zeros.push(Complex64::new(0.0, 2.0 * l as f64));
            zeros.push(Complex64::new(0.0, -2.0 * l as f64));
        }
        Ok(Self { mode: n, point, poles, zeros, residues, projector })
    }

    pub fn value(&self, lambda: Complex64) -> Result<Complex64> {
        self.projector.value(lambda, &self.point)
    }
}
