//! Spectral analysis of SO(2)-finite functions on the disk.

pub mod closed_form;
pub mod envelope;
pub mod function;
pub mod modes;
pub mod spherical;
pub mod transform;

pub use closed_form::{
    closed_form_projection, coefficient_rule, gamma_factor, gamma_factor_residue, pole_index, residue_at_pole,
    residue_sum_check, ClosedFormProjector, MeromorphicProfile, ResidueSum,
};
pub use envelope::{disk_poles, projection_magnitudes, pw_envelope_disk, pw_envelope_disk_orders, POLE_DISC_RADIUS};
pub use function::{ModeProfile, SO2FiniteFunction};
pub use modes::{
    eigen_expansion_coeffs, radial_factor, so2_decompose, AliasWarning, Decomposition, EigenExpansion, PolarSamples,
    EXPANSION_ANGLES, EXPANSION_RADIUS, MODE_DROP_TOL,
};
pub use spherical::{
    expansion_coefficient, generalized_spherical, generalized_spherical_many, spherical_phi_disk,
    spherical_phi_disk_at_origin, SphericalForm,
};
pub use transform::{
    disk_kappa, fh_density, fh_forward_disk, inversion_disk, inversion_of, plancherel_disk, projection_by_convolution,
    spectral_projection_disk, DiskPlancherel, DiskQuadrature, Inversion, ModeTransforms, TruncationWarning,
    INVERSION_STEP,
};
