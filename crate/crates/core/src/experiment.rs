//! Two-slit geometry and kinematics, plus the derived quantities every
//! downstream formula consumes.

use crate::error::{Error, Result, Warning};
use crate::units::{constants, de_broglie_wavelength};

/// Plain input bundle for [`ExperimentConfig::new`].
#[derive(Debug, Clone, Copy)]
pub struct ExperimentParams {
    /// Slit spacing d, cm.
    pub slit_spacing: f64,
    /// Emitter-to-screen distance L, cm.
    pub source_to_screen: f64,
    /// Position of the slit plane along L, in (0, 1). 0.5 puts the slits midway.
    pub slit_fraction: f64,
    /// Field-detector distance R in the slit plane, cm.
    pub detector_distance: f64,
    /// Particle speed v, cm/s.
    pub speed: f64,
    /// Charge in units of |e|.
    pub charge_number: f64,
    /// Particle mass, g.
    pub mass: f64,
    /// Optional override for log(pi L / lambda).
    pub log_term_override: Option<f64>,
}

impl ExperimentParams {
    /// Required geometry and kinematics; slit fraction defaults to 0.5,
    /// charge to 0, and the log term to the computed value.
    pub fn new(slit_spacing: f64, source_to_screen: f64, detector_distance: f64, speed: f64, mass: f64) -> Self {
        ExperimentParams {
            slit_spacing,
            source_to_screen,
            slit_fraction: 0.5,
            detector_distance,
            speed,
            charge_number: 0.0,
            mass,
            log_term_override: None,
        }
    }
}

/// Validated two-slit setup. Immutable after construction.
#[derive(Debug, Clone, Copy)]
pub struct ExperimentConfig {
    slit_spacing: f64,
    source_to_screen: f64,
    slit_fraction: f64,
    detector_distance: f64,
    speed: f64,
    charge_number: f64,
    mass: f64,
    log_term_override: Option<f64>,
}

impl ExperimentConfig {
    pub fn new(p: ExperimentParams) -> Result<Self> {
        let k = constants();
        let positive = [
            (p.slit_spacing, "slit spacing d"),
            (p.source_to_screen, "source-to-screen distance L"),
            (p.detector_distance, "detector distance R"),
            (p.mass, "mass m"),
        ];
        for (value, name) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive and finite, got {value}")));
            }
        }
        if !(p.speed > 0.0 && p.speed < k.c) {
            return Err(Error::Config(format!(
                "speed v must satisfy 0 < v < c, got {} cm/s",
                p.speed
            )));
        }
        if !(p.charge_number >= 0.0 && p.charge_number.is_finite()) {
            return Err(Error::Config(format!(
                "charge number Z must be nonnegative and finite, got {}",
                p.charge_number
            )));
        }
        if !(p.slit_fraction > 0.0 && p.slit_fraction < 1.0) {
            return Err(Error::Config(format!(
                "slit fraction must lie in (0, 1), got {}",
                p.slit_fraction
            )));
        }
        if let Some(lt) = p.log_term_override {
            if !lt.is_finite() {
                return Err(Error::Config(format!("log term override must be finite, got {lt}")));
            }
        }
        Ok(ExperimentConfig {
            slit_spacing: p.slit_spacing,
            source_to_screen: p.source_to_screen,
            slit_fraction: p.slit_fraction,
            detector_distance: p.detector_distance,
            speed: p.speed,
            charge_number: p.charge_number,
            mass: p.mass,
            log_term_override: p.log_term_override,
        })
    }

    pub fn slit_spacing(&self) -> f64 {
        self.slit_spacing
    }

    pub fn source_to_screen(&self) -> f64 {
        self.source_to_screen
    }

    pub fn slit_fraction(&self) -> f64 {
        self.slit_fraction
    }

    /// Slit-plane-to-screen distance (1 - slit_fraction) L, cm.
    pub fn slit_to_screen(&self) -> f64 {
        (1.0 - self.slit_fraction) * self.source_to_screen
    }

    pub fn detector_distance(&self) -> f64 {
        self.detector_distance
    }

    pub fn speed(&self) -> f64 {
        self.speed
    }

    pub fn charge_number(&self) -> f64 {
        self.charge_number
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Time of flight L/v, s.
    pub fn flight_time(&self) -> f64 {
        self.source_to_screen / self.speed
    }

    /// Coulomb pulse width c T, cm.
    pub fn ct(&self) -> f64 {
        constants().c * self.flight_time()
    }

    /// Time at which the particle crosses the slit plane, s.
    pub fn slit_time(&self) -> f64 {
        self.slit_fraction * self.flight_time()
    }

    /// de Broglie wavelength of the particle, cm.
    pub fn wavelength(&self) -> f64 {
        // m and v were validated at construction.
        de_broglie_wavelength(self.mass, self.speed).expect("validated kinematics")
    }

    /// log(pi L / lambda), or the stored override.
    pub fn log_term(&self) -> Result<f64> {
        if let Some(lt) = self.log_term_override {
            return Ok(lt);
        }
        let lambda = self.wavelength();
        let arg = std::f64::consts::PI * self.source_to_screen / lambda;
        if arg <= 1.0 {
            return Err(Error::Domain(format!(
                "pi L / lambda = {arg:.6e} <= 1: the path must span many de Broglie wavelengths"
            )));
        }
        Ok(arg.ln())
    }

    /// Far-field fringe spacing lambda L_s / d, cm, with L_s the
    /// slit-to-screen distance.
    pub fn fringe_spacing(&self) -> f64 {
        self.wavelength() * self.slit_to_screen() / self.slit_spacing
    }

    /// Non-fatal conditions; see [`Warning`].
    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        let ratio = self.slit_spacing / self.detector_distance;
        if ratio >= 0.01 {
            out.push(Warning::SlitSpacingNotSmall { ratio });
        }
        let ct = self.ct();
        // Relative slack: configs sit exactly at R = cT, and the comparison
        // must not fire on the last ulp of L/v roundtrips.
        if self.detector_distance * (1.0 + 1e-9) < ct {
            out.push(Warning::DetectorInsideLightCone {
                detector_distance: self.detector_distance,
                ct,
            });
        }
        out
    }
}

/// The bundled large-charge reference setup: d = 1 um, cT = 6 cm (v = c/3,
/// L = 2 cm), R = cT, electron mass, log term pinned at 20.
pub fn reference_config(charge_number: f64) -> ExperimentConfig {
    let k = constants();
    let mut p = ExperimentParams::new(1e-4, 2.0, 6.0, k.c / 3.0, crate::units::ELECTRON_MASS);
    p.charge_number = charge_number;
    p.log_term_override = Some(20.0);
    ExperimentConfig::new(p).expect("reference configuration is valid")
}
