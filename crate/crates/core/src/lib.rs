#![allow(clippy::neg_cmp_op_on_partial_ord)]
//! Numerical harmonic analysis on the hyperbolic disk and on radial
//! Damek-Ricci spaces: special functions, spherical transforms, spectral
//! projections, Plancherel and Paley-Wiener checks.

pub mod disk;
pub mod disk_spectral;
pub mod error;
pub mod na;
pub mod numerics;
pub mod profile;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
