//! Quantitative toolkit for which-path detection limits and radiative
//! decoherence in charged-particle two-slit interference, with the
//! gravitational-detection analog.
//!
//! The pieces fit together as follows: [`units`] fixes Gaussian-CGS
//! constants; [`experiment`] holds the slit geometry and kinematics;
//! [`fieldmeas`] gives the quantum limit on averaged-field measurement and
//! the critical charge `Z1` for Coulomb path detection; [`pathinfo`] turns
//! detector outcomes into a distinguishability; [`decoherence`] computes the
//! fringe visibility lost to radiation, both in closed form and through an
//! independent mode-integral pipeline, with the critical charge `Z2`;
//! [`pattern`] synthesizes screen patterns, builds them up particle by
//! particle, and evaluates the duality curve `V^2 + D^2`; [`gravity`] treats
//! path detection through the Newtonian field and the Planck-length fringe
//! bound.

// Validation deliberately writes `!(x > 0.0)` so NaN fails closed.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod decoherence;
pub mod error;
pub mod experiment;
pub mod fieldmeas;
pub mod gravity;
pub mod math;
pub mod pathinfo;
pub mod pattern;
pub mod units;

pub use error::{Error, Result, Warning};
pub use experiment::{ExperimentConfig, ExperimentParams};
