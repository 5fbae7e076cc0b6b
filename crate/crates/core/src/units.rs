//! Physical constants and kinematic conversions, Gaussian-CGS throughout.
//!
//! Everything downstream consumes these values; SI appears only at I/O
//! boundaries. Derived constants (`alpha`, the Planck scales) are computed
//! from the stored primitives so the defining identities hold exactly.

use crate::error::{Error, Result};

/// Planck constant h, erg s (exact by SI definition).
const PLANCK_H: f64 = 6.626_070_15e-27;

/// Speed of light, cm/s (exact).
const SPEED_OF_LIGHT: f64 = 2.997_924_58e10;

/// Elementary charge, esu (exact conversion of the SI coulomb value).
const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19 * (SPEED_OF_LIGHT / 10.0);

/// Newtonian gravitational constant, cm^3 g^-1 s^-2 (CODATA 2018).
const GRAVITATIONAL: f64 = 6.674_30e-8;

/// Electron rest mass, g (CODATA 2018).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-28;

/// Physical constants in Gaussian-CGS units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Reduced Planck constant, erg s.
    pub hbar: f64,
    /// Speed of light, cm/s.
    pub c: f64,
    /// Elementary charge magnitude, esu.
    pub e: f64,
    /// Fine structure constant e^2/(hbar c).
    pub alpha: f64,
    /// Newtonian gravitational constant, cm^3/(g s^2).
    pub g_newton: f64,
    /// Planck length sqrt(G hbar / c^3), cm.
    pub planck_length: f64,
    /// Planck mass sqrt(hbar c / G), g.
    pub planck_mass: f64,
}

/// CODATA-consistent constants; deterministic, derived identities exact.
pub fn constants() -> Constants {
    let hbar = PLANCK_H / (2.0 * std::f64::consts::PI);
    let c = SPEED_OF_LIGHT;
    let e = ELEMENTARY_CHARGE;
    let g_newton = GRAVITATIONAL;
    Constants {
        hbar,
        c,
        e,
        alpha: e * e / (hbar * c),
        g_newton,
        planck_length: (g_newton * hbar / (c * c * c)).sqrt(),
        planck_mass: (hbar * c / g_newton).sqrt(),
    }
}

/// de Broglie wavelength 2 pi hbar / (m v), cm.
pub fn de_broglie_wavelength(mass: f64, speed: f64) -> Result<f64> {
    let k = constants();
    if !(mass > 0.0) {
        return Err(Error::Domain(format!("mass must be positive, got {mass}")));
    }
    if !(speed > 0.0) {
        return Err(Error::Domain(format!("speed must be positive, got {speed}")));
    }
    if speed >= k.c {
        return Err(Error::Domain(format!(
            "speed {speed} cm/s is not below c = {} cm/s",
            k.c
        )));
    }
    Ok(2.0 * std::f64::consts::PI * k.hbar / (mass * speed))
}

/// Maximum frequency of emitted photons, rad/s: energy conservation caps it
/// at m v^2 / (2 hbar), identically pi v / lambda.
pub fn max_photon_frequency(mass: f64, speed: f64) -> Result<f64> {
    // Validation shared with the wavelength form of the same quantity.
    let lambda = de_broglie_wavelength(mass, speed)?;
    let omega = mass * speed * speed / (2.0 * constants().hbar);
    debug_assert!(
        (omega - std::f64::consts::PI * speed / lambda).abs() <= 1e-12 * omega,
        "kinetic and wavelength forms of the photon cutoff disagree"
    );
    Ok(omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_identities_exact() {
        let k = constants();
        assert!((k.alpha - k.e * k.e / (k.hbar * k.c)).abs() <= 1e-12 * k.alpha);
        let lpl = (k.g_newton * k.hbar / k.c.powi(3)).sqrt();
        assert!((k.planck_length - lpl).abs() <= 1e-12 * lpl);
        let mpl = (k.hbar * k.c / k.g_newton).sqrt();
        assert!((k.planck_mass - mpl).abs() <= 1e-12 * mpl);
    }

    #[test]
    fn fine_structure_value() {
        let k = constants();
        assert!((1.0 / k.alpha - 137.036).abs() < 1e-3);
    }

    #[test]
    fn planck_mass_scale() {
        // ~2e-5 g
        let k = constants();
        assert!((k.planck_mass - 2e-5).abs() / 2e-5 < 0.1);
        assert!((k.planck_mass - 2.176_434_342_717_898e-5).abs() < 1e-12 * k.planck_mass);
    }

    #[test]
    fn wavelength_definition_inverted() {
        // m v = 2 pi hbar gives lambda = 1 cm
        let k = constants();
        let mv = 2.0 * std::f64::consts::PI * k.hbar;
        let v = 1.0;
        let m = mv / v;
        let lam = de_broglie_wavelength(m, v).unwrap();
        assert!((lam - 1.0).abs() < 1e-14);
    }

    #[test]
    fn wavelength_electron_half_c() {
        let k = constants();
        let lam = de_broglie_wavelength(ELECTRON_MASS, 0.5 * k.c).unwrap();
        assert!((lam - 4.852_620_477_366_184e-10).abs() < 1e-12 * lam);
        assert!((lam - 4.85e-10).abs() / 4.85e-10 < 1e-3);
    }

    #[test]
    fn wavelength_halves_when_mass_doubles() {
        let lam1 = de_broglie_wavelength(1e-24, 1e8).unwrap();
        let lam2 = de_broglie_wavelength(2e-24, 1e8).unwrap();
        assert!((lam1 / lam2 - 2.0).abs() < 1e-14);
    }

    #[test]
    fn wavelength_domain_errors() {
        let k = constants();
        assert!(de_broglie_wavelength(0.0, 1e8).is_err());
        assert!(de_broglie_wavelength(-1e-24, 1e8).is_err());
        assert!(de_broglie_wavelength(1e-24, 0.0).is_err());
        assert!(de_broglie_wavelength(1e-24, k.c).is_err());
    }

    #[test]
    fn photon_cutoff_forms_agree() {
        let k = constants();
        for &(m, v) in &[(ELECTRON_MASS, 0.3 * k.c), (1e-23, 1e7), (5e-20, 3e9)] {
            let omega = max_photon_frequency(m, v).unwrap();
            let lambda = de_broglie_wavelength(m, v).unwrap();
            let alt = std::f64::consts::PI * v / lambda;
            assert!((omega - alt).abs() <= 1e-12 * omega);
        }
    }
}
