//! Damek-Ricci spaces NA: group law, geodesic geometry, Poisson kernel,
//! spherical analysis of radial functions.

pub mod bounds;
pub mod group;
pub mod haar;
pub mod htype;
pub mod params;
pub mod poisson;
pub mod spectral;
pub mod spherical;

pub use bounds::{
    density_poles, koornwinder_bound_check, pw_envelope_radial, pw_envelope_radial_orders, KOORNWINDER_T_STEP,
};
pub use group::{distance, geodesic_inversion, geodesic_rho, group_inv, group_mul, NAPoint};
pub use haar::haar_radial_ratio;
pub use htype::HTypeStructure;
pub use params::NAParams;
pub use poisson::{poisson_kernel, poisson_power};
pub use spectral::{
    analytic_kappa, calibrate_kappa, inversion_radial, l2_projection_bound_check, plancherel_check, plancherel_density,
    spectral_projection_radial, spherical_transform, Calibration, SphericalTransform,
};
pub use spherical::{radial_density, radial_drift, spherical_phi_na};
