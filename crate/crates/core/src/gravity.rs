//! Which-path detection through the Newtonian potential: interferometric
//! detector response, the required tidal accuracy, the mass threshold, and
//! the fringe-versus-Planck-length comparison.

use crate::error::{Error, Result};
use crate::experiment::ExperimentConfig;
use crate::units::constants;

/// Two-mirror interferometric detector: the mirror separation is a harmonic
/// degree of freedom (frequency includes the mirrors' mutual attraction).
#[derive(Debug, Clone, Copy)]
pub struct GravityDetector {
    /// Equilibrium mirror separation S, cm.
    pub mirror_separation: f64,
    /// Oscillator frequency omega, rad/s.
    pub frequency: f64,
    /// Equilibrium midpoint position x0, cm.
    pub midpoint: f64,
    /// Distance from the slits, cm.
    pub slit_distance: f64,
}

impl GravityDetector {
    pub fn new(mirror_separation: f64, frequency: f64, midpoint: f64, slit_distance: f64) -> Result<Self> {
        for (v, name) in [
            (mirror_separation, "mirror separation S"),
            (frequency, "oscillator frequency"),
            (slit_distance, "slit distance R"),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if !midpoint.is_finite() {
            return Err(Error::Config(format!("midpoint must be finite, got {midpoint}")));
        }
        Ok(GravityDetector { mirror_separation, frequency, midpoint, slit_distance })
    }
}

/// Closed-form relative mirror displacement for a step tidal pulse
/// phi''(x0) switched on at t = 0 and held constant, starting from rest:
/// eta(t) = -phi'' S (1 - cos omega t) / omega^2.
pub fn detector_response(det: &GravityDetector, phi_pp: f64, t: f64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("time must be nonnegative and finite, got {t}")));
    }
    let omega = det.frequency;
    Ok(-phi_pp * det.mirror_separation * (1.0 - (omega * t).cos()) / (omega * omega))
}

/// Integrate the full two-mirror system
/// x_pm'' = -/+ (omega^2/2)(x_+ - x_- - S) - phi'(x_pm)
/// with RK4 from rest at the equilibrium positions, and report the relative
/// displacement eta(t) = (x_+ - x_-) - S. `phi_grad` is the potential
/// gradient phi'(x). `omega_dt` sets the step as a fraction of the
/// oscillation (default oracle step 1e-3).
pub fn detector_response_numeric<F: Fn(f64) -> f64>(
    det: &GravityDetector,
    phi_grad: F,
    t: f64,
    omega_dt: f64,
) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("time must be nonnegative and finite, got {t}")));
    }
    if !(omega_dt > 0.0 && omega_dt <= 0.1) {
        return Err(Error::Numerics(format!(
            "step fraction omega*dt must lie in (0, 0.1] for a stable integration, got {omega_dt}"
        )));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let omega = det.frequency;
    let s = det.mirror_separation;
    let n_steps = (omega * t / omega_dt).ceil() as usize;
    let h = t / n_steps as f64;

    // State: [x+, v+, x-, v-].
    let deriv = |y: &[f64; 4]| -> [f64; 4] {
        let stretch = y[0] - y[2] - s;
        [
            y[1],
            -0.5 * omega * omega * stretch - phi_grad(y[0]),
            y[3],
            0.5 * omega * omega * stretch - phi_grad(y[2]),
        ]
    };
    let mut y = [det.midpoint + 0.5 * s, 0.0, det.midpoint - 0.5 * s, 0.0];
    for _ in 0..n_steps {
        let k1 = deriv(&y);
        let y2 = add_scaled(&y, &k1, 0.5 * h);
        let k2 = deriv(&y2);
        let y3 = add_scaled(&y, &k2, 0.5 * h);
        let k3 = deriv(&y3);
        let y4 = add_scaled(&y, &k3, h);
        let k4 = deriv(&y4);
        for i in 0..4 {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerics("two-mirror integration diverged".into()));
        }
    }
    Ok(y[0] - y[2] - s)
}

fn add_scaled(y: &[f64; 4], k: &[f64; 4], h: f64) -> [f64; 4] {
    [y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]]
}

/// Tidal accuracy needed to tell the two slits apart.
#[derive(Debug, Clone, Copy)]
pub struct PhiPpAccuracy {
    /// Exact difference 2 G m (1/R^3 - 1/(R+d)^3), 1/s^2.
    pub exact: f64,
    /// Leading order in d: 6 G m d / R^4.
    pub leading_order: f64,
}

/// Difference in phi''(x0) between upper-slit and lower-slit passage of a
/// mass m, detector at distance R, slit spacing d.
pub fn required_phi_pp_accuracy(mass: f64, r: f64, d: f64) -> Result<PhiPpAccuracy> {
    for (v, name) in [(mass, "mass"), (r, "distance R"), (d, "slit spacing d")] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
        }
    }
    let g = constants().g_newton;
    Ok(PhiPpAccuracy {
        exact: 2.0 * g * mass * (1.0 / (r * r * r) - 1.0 / ((r + d) * (r + d) * (r + d))),
        leading_order: 6.0 * g * mass * d / (r * r * r * r),
    })
}

/// Mass scale above which gravitational path detection becomes possible:
/// (R/d) times the Planck mass, g.
pub fn critical_mass(cfg: &ExperimentConfig) -> f64 {
    (cfg.detector_distance() / cfg.slit_spacing()) * constants().planck_mass
}

/// Fringe fineness against the Planck-length measurement floor.
#[derive(Debug, Clone, Copy)]
pub struct FringePlanckReport {
    /// Fringe separation scale (L/d)(hbar/(m v)), cm.
    pub fringe: f64,
    /// Fringe over the Planck length.
    pub ratio_to_planck_length: f64,
    /// The geometric bound cT/R the ratio is compared against.
    pub ct_over_r: f64,
    /// Whether the supplied mass reaches the critical mass.
    pub mass_exceeds_critical: bool,
    /// Whether ratio <= cT/R (the chain that makes the pattern unresolvable).
    pub bound_holds: bool,
}

/// Evaluate the fringe scale for mass `m` and compare against the
/// Planck-length floor: for m >= critical mass the ratio is bounded by cT/R.
pub fn fringe_vs_planck(cfg: &ExperimentConfig, mass: f64) -> Result<FringePlanckReport> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::Domain(format!("mass must be positive and finite, got {mass}")));
    }
    let k = constants();
    let fringe = (cfg.source_to_screen() / cfg.slit_spacing()) * k.hbar / (mass * cfg.speed());
    let ratio = fringe / k.planck_length;
    let ct_over_r = cfg.ct() / cfg.detector_distance();
    Ok(FringePlanckReport {
        fringe,
        ratio_to_planck_length: ratio,
        ct_over_r,
        mass_exceeds_critical: mass >= critical_mass(cfg),
        // Equality holds exactly at m = critical mass; allow the last ulps.
        bound_holds: ratio <= ct_over_r * (1.0 + 1e-12),
    })
}
