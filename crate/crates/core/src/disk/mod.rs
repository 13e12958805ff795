//! Geometry of the open unit disk with measure (1-|z|²)^{-2} dx dy.

pub mod geometry;
pub mod point;

pub use geometry::{
    disk_distance, horocycle_bracket, laplacian_disk_apply, measure_weight_cartesian, measure_weight_polar,
    mobius_from_origin, mobius_to_origin, poisson_power_disk, LaplacianForm, POLAR_CROSSOVER,
};
pub use point::{to_cartesian, to_polar, BoundaryPoint, DiskPoint};
