#![allow(clippy::neg_cmp_op_on_partial_ord)]
//! Batch front-end for the spectral experiments: configuration, experiment
//! registry and report artifacts.

pub mod config;
pub mod experiments;
pub mod report;
