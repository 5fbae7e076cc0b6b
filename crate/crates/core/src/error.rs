use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value violates a construction invariant.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A numerical routine failed (non-convergence, divergence, budget exhausted).
    #[error("numerical failure: {0}")]
    Numerics(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Non-fatal conditions flagged during validation.
///
/// The approximations behind the closed forms assume the field detector is
/// far away compared to the slit spacing and outside the light cone of the
/// flight; violating either does not invalidate construction, only the
/// quantitative accuracy of the estimates.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// `d / R` is not small; the first-order field-difference forms degrade.
    SlitSpacingNotSmall { ratio: f64 },
    /// Detector distance is inside the Coulomb pulse width `cT`, so the
    /// no-back-reaction assumption is questionable.
    DetectorInsideLightCone { detector_distance: f64, ct: f64 },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::SlitSpacingNotSmall { ratio } => {
                write!(f, "d/R = {ratio:.3e} is not << 1; far-detector forms are degraded")
            }
            Warning::DetectorInsideLightCone { detector_distance, ct } => {
                write!(
                    f,
                    "detector distance R = {detector_distance:.6e} cm is inside the Coulomb \
                     pulse width cT = {ct:.6e} cm; back-reaction is not negligible"
                )
            }
        }
    }
}
