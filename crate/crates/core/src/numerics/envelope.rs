//! Envelope certificates C = max |value| / envelope over a sample set.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeFit {
    pub model_order: i32,
    pub fitted_constant: f64,
    /// max(|value|/envelope - C, 0) over the samples.
    pub max_violation: f64,
    pub samples: usize,
    /// Index of the sample attaining C.
    pub argmax: Option<usize>,
}

/// Decay model of the envelope in λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnvelopeKind {
    /// (1+|λ|)^{-N} e^{e|Im λ|}
    Linear,
    /// (1+|λ|²)^{-N} e^{e|Im λ|}
    Quadratic,
}

/// Paley-Wiener weight with type exponent `exponent` = a + d.
pub fn pw_weight(kind: EnvelopeKind, lambda: Complex64, order: i32, exponent: f64) -> f64 {
    let base = match kind {
        EnvelopeKind::Linear => 1.0 + lambda.norm(),
        EnvelopeKind::Quadratic => 1.0 + lambda.norm_sqr(),
    };
    base.powi(-order) * (exponent * lambda.im.abs()).exp()
}

/// Certificate from (|value|, envelope) pairs.
pub fn fit_ratios<I: IntoIterator<Item = (f64, f64)>>(order: i32, pairs: I) -> Result<EnvelopeFit> {
    let mut best = 0.0f64;
    let mut argmax = None;
    let mut ratios = Vec::new();
    for (i, (v, e)) in pairs.into_iter().enumerate() {
        if !(e > 0.0) || !e.is_finite() {
            return Err(Error::Domain(format!("envelope value {e} at sample {i}")));
        }
        let r = v.abs() / e;
        if !r.is_finite() {
            return Err(Error::Domain(format!("non-finite ratio at sample {i}")));
        }
        if r > best || argmax.is_none() {
            best = best.max(r);
            argmax = Some(i);
        }
        ratios.push(r);
    }
    if ratios.is_empty() {
        return Err(Error::InvalidInput("envelope fit needs at least one sample".into()));
    }
    let max_violation = ratios.iter().map(|r| (r - best).max(0.0)).fold(0.0, f64::max);
    Ok(EnvelopeFit { model_order: order, fitted_constant: best, max_violation, samples: ratios.len(), argmax })
}

/// Certificate for samples (λ, |value|) against
/// `pw_weight(kind, λ, order, a + d)`.
pub fn envelope_fit(
    values: &[(Complex64, f64)],
    order: i32,
    a: f64,
    d: f64,
    kind: EnvelopeKind,
) -> Result<EnvelopeFit> {
    fit_ratios(order, values.iter().map(|&(l, v)| (v, pw_weight(kind, l, order, a + d))))
}
