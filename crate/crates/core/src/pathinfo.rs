//! Detector outcome probabilities and the path distinguishability.
//!
//! The detector reads a Gaussian-smeared value of the averaged field and
//! classifies against the fixed midpoint threshold (E_u + E_l)/2. With
//! equal-amplitude slits the four joint probabilities are Gaussian tail
//! integrals and the distinguishability collapses to a single error
//! function of the field separation over the measurement width.

use crate::error::{Error, Result};
use crate::experiment::ExperimentConfig;
use crate::fieldmeas::critical_charge_z1;
use crate::math::erf::{erf, normal_cdf};

/// Gaussian detector model: expected averaged fields for the two paths and
/// the measurement width.
#[derive(Debug, Clone, Copy)]
pub struct DetectionModel {
    e_upper: f64,
    e_lower: f64,
    width: f64,
}

impl DetectionModel {
    pub fn new(e_upper: f64, e_lower: f64, width: f64) -> Result<Self> {
        if !(e_upper > e_lower) {
            return Err(Error::Config(format!(
                "expected upper-path field ({e_upper}) must exceed lower-path field ({e_lower})"
            )));
        }
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::Config(format!("measurement width must be positive, got {width}")));
        }
        Ok(DetectionModel { e_upper, e_lower, width })
    }

    pub fn e_upper(&self) -> f64 {
        self.e_upper
    }

    pub fn e_lower(&self) -> f64 {
        self.e_lower
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    /// Field separation Delta E = E_u - E_l.
    pub fn separation(&self) -> f64 {
        self.e_upper - self.e_lower
    }

    /// Classifier threshold (E_u + E_l)/2.
    pub fn threshold(&self) -> f64 {
        0.5 * (self.e_upper + self.e_lower)
    }
}

/// Joint probabilities of (detector reading, actual path); reads and paths
/// are each upper/lower, equal-amplitude slits assumed.
#[derive(Debug, Clone, Copy)]
pub struct PathProbabilities {
    /// p(D_u, u): read upper, took upper.
    pub read_upper_took_upper: f64,
    /// p(D_l, u): read lower, took upper.
    pub read_lower_took_upper: f64,
    /// p(D_l, l): read lower, took lower.
    pub read_lower_took_lower: f64,
    /// p(D_u, l): read upper, took lower.
    pub read_upper_took_lower: f64,
}

impl PathProbabilities {
    /// Sum of the four joint probabilities; exactly 1 by construction.
    pub fn total(&self) -> f64 {
        (self.read_upper_took_upper + self.read_lower_took_upper)
            + (self.read_lower_took_lower + self.read_upper_took_lower)
    }
}

/// The four joint probabilities from Gaussian tails above/below the midpoint
/// threshold.
pub fn path_probabilities(model: &DetectionModel) -> PathProbabilities {
    // P(read upper | took upper) = P(E > threshold), E ~ N(E_u, width^2).
    let x = model.separation() / (2.0 * model.width);
    let hit = normal_cdf(x);
    let miss = 1.0 - hit;
    PathProbabilities {
        read_upper_took_upper: 0.5 * hit,
        read_lower_took_upper: 0.5 * miss,
        read_lower_took_lower: 0.5 * hit,
        read_upper_took_lower: 0.5 * miss,
    }
}

/// Distinguishability D = |p(D_u,u) - p(D_l,u)| + |p(D_l,l) - p(D_u,l)|
/// = erf(Delta E / (2 sqrt(2) delta E)).
pub fn distinguishability(model: &DetectionModel) -> f64 {
    erf(model.separation() / (2.0 * std::f64::consts::SQRT_2 * model.width))
}

/// Distinguishability as a function of charge, erf(Z / (2 sqrt(2) Z1)).
pub fn distinguishability_of_charge(charge_number: f64, cfg: &ExperimentConfig) -> Result<f64> {
    if !(charge_number >= 0.0) {
        return Err(Error::Domain(format!("charge number must be nonnegative, got {charge_number}")));
    }
    let z1 = critical_charge_z1(cfg);
    Ok(erf(charge_number / (2.0 * std::f64::consts::SQRT_2 * z1)))
}
