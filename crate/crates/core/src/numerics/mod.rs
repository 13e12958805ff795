//! Quadrature, finite-difference stencils, spectral grids and envelope fits.

pub mod circle;
pub mod envelope;
pub mod gauss;
pub mod grid;
pub mod quadrature;
pub mod stencil;

pub use circle::integrate_circle;
pub use envelope::{envelope_fit, fit_ratios, pw_weight, EnvelopeFit, EnvelopeKind};
pub use gauss::{composite_gauss, gauss_legendre, Rule};
pub use grid::{range_inclusive, ComplexGrid};
pub use quadrature::{integrate_radial, QuadratureMethod, QuadratureSpec};
pub use stencil::{laplacian_fd, observed_orders, Geometry, StencilPoint};
