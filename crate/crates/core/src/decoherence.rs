//! Radiative dephasing of the two-path superposition.
//!
//! The dephasing functional is a closed-contour integral of the free
//! electromagnetic field along the pair of classical paths: upper path
//! forward in time, lower path reversed. For a Gaussian vacuum the pattern
//! contrast is `V = exp(log V)` with
//!
//! ```text
//! log V = -(Z^2 alpha / 2 hbar c) * Re Phi,
//! Re Phi = (2 hbar c / 3 pi) int k dk | int dt e^{-i omega t} dv(t) |^2,
//! ```
//!
//! where `dv(t)` is the upper-minus-lower velocity difference along the
//! contour and k = omega/c. For piecewise-constant leg velocities the time
//! transform is evaluated analytically segment by segment; numerical time
//! quadrature exists only as a test oracle.
//!
//! Emission at the source and absorption at the screen are modelled as
//! adiabatic: the current difference is ramped on and off over a fraction
//! of the flight (`endpoint_ramp`). Only the slit kink radiates sharply,
//! which is what makes the transform approach `(i/omega)(v1 - v1' - v2 + v2')`
//! up to a phase at large `omega T`. A hard truncation (`endpoint_ramp = 0`)
//! instead adds spurious source/screen corners whose mode sum grows by an
//! extra factor ~3/2 in the log; it is kept available for sensitivity
//! studies.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::experiment::ExperimentConfig;
use crate::math::quad;
use crate::units::constants;

/// Default adiabatic turn-on/turn-off fraction of the flight time.
pub const DEFAULT_ENDPOINT_RAMP: f64 = 0.25;

/// In-plane velocity, cm/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    fn sub(&self, other: &Vec2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

/// Piecewise-constant-velocity path pair: each leg holds one velocity before
/// the slit kink and one after.
#[derive(Debug, Clone, Copy)]
pub struct TrajectoryPair {
    pub upper_before: Vec2,
    pub upper_after: Vec2,
    pub lower_before: Vec2,
    pub lower_after: Vec2,
    /// Total flight time T, s.
    pub total_time: f64,
    /// Time of the velocity kink at the slits, s.
    pub slit_time: f64,
    /// Adiabatic endpoint window, as a fraction of T in [0, 1/2].
    pub endpoint_ramp: f64,
}

impl TrajectoryPair {
    pub fn new(
        upper_before: Vec2,
        upper_after: Vec2,
        lower_before: Vec2,
        lower_after: Vec2,
        total_time: f64,
        slit_time: f64,
    ) -> Result<Self> {
        let pair = TrajectoryPair {
            upper_before,
            upper_after,
            lower_before,
            lower_after,
            total_time,
            slit_time,
            endpoint_ramp: DEFAULT_ENDPOINT_RAMP,
        };
        pair.validate()?;
        Ok(pair)
    }

    /// Same trajectory with a different endpoint window (0 = hard truncation).
    pub fn with_endpoint_ramp(mut self, ramp: f64) -> Result<Self> {
        self.endpoint_ramp = ramp;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let c = constants().c;
        for (v, name) in [
            (self.upper_before, "upper pre-slit velocity"),
            (self.upper_after, "upper post-slit velocity"),
            (self.lower_before, "lower pre-slit velocity"),
            (self.lower_after, "lower post-slit velocity"),
        ] {
            if !(v.norm() < c) {
                return Err(Error::Config(format!("{name} has |v| = {} >= c", v.norm())));
            }
        }
        if !(self.total_time > 0.0 && self.total_time.is_finite()) {
            return Err(Error::Config(format!("total time must be positive, got {}", self.total_time)));
        }
        if !(self.slit_time > 0.0 && self.slit_time < self.total_time) {
            return Err(Error::Config(format!(
                "slit time must lie strictly inside (0, T), got {} with T = {}",
                self.slit_time, self.total_time
            )));
        }
        if !(0.0..=0.5).contains(&self.endpoint_ramp) {
            return Err(Error::Config(format!(
                "endpoint ramp must lie in [0, 1/2], got {}",
                self.endpoint_ramp
            )));
        }
        Ok(())
    }

    /// Straight legs from the source through each slit to the screen center.
    /// At `slit_fraction = 1/2` this is the mirror-symmetric configuration
    /// where the post-slit velocities swap the pre-slit ones.
    pub fn central_fringe(cfg: &ExperimentConfig) -> Result<Self> {
        let t = cfg.flight_time();
        let ts = cfg.slit_time();
        let half_d = 0.5 * cfg.slit_spacing();
        let v_axial = cfg.speed();
        TrajectoryPair::new(
            Vec2::new(v_axial, half_d / ts),
            Vec2::new(v_axial, -half_d / (t - ts)),
            Vec2::new(v_axial, -half_d / ts),
            Vec2::new(v_axial, half_d / (t - ts)),
            t,
            ts,
        )
    }

    /// Velocity differences before / after the kink.
    fn leg_differences(&self) -> (Vec2, Vec2) {
        (
            self.upper_before.sub(&self.lower_before),
            self.upper_after.sub(&self.lower_after),
        )
    }

    /// Kink amplitude v1 - v1' - v2 + v2'.
    pub fn kink_vector(&self) -> Vec2 {
        let (before, after) = self.leg_differences();
        before.sub(&after)
    }

    /// Breakpoints of the windowed current difference together with the
    /// per-segment endpoint values: the current is linear on each segment.
    fn segments(&self) -> Vec<(f64, f64, [f64; 2], [f64; 2])> {
        let t_total = self.total_time;
        let tau = self.endpoint_ramp * t_total;
        let (before, after) = self.leg_differences();
        let window = |t: f64| -> f64 {
            if tau == 0.0 {
                1.0
            } else if t < tau {
                t / tau
            } else if t > t_total - tau {
                (t_total - t) / tau
            } else {
                1.0
            }
        };
        let dv = |t: f64| -> [f64; 2] {
            if t < self.slit_time {
                [before.x, before.y]
            } else {
                [after.x, after.y]
            }
        };
        let mut cuts = vec![0.0, tau, self.slit_time, t_total - tau, t_total];
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-300);
        let mut segs = Vec::with_capacity(cuts.len() - 1);
        for pair in cuts.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if !(b > a) {
                continue;
            }
            let mid = 0.5 * (a + b);
            let v = dv(mid);
            let (wa, wb) = (window(a), window(b));
            segs.push((a, b, [v[0] * wa, v[1] * wa], [v[0] * wb, v[1] * wb]));
        }
        segs
    }
}

/// Closed-contour velocity transform int dt e^{-i omega t} dv(t) with the
/// endpoint window applied, as an analytic sum over linear segments. Returns
/// the two in-plane components. Units: cm.
pub fn contour_velocity_transform(traj: &TrajectoryPair, omega: f64) -> Result<[Complex64; 2]> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::Domain(format!("omega must be positive and finite, got {omega}")));
    }
    let mut total = [Complex64::new(0.0, 0.0); 2];
    for (a, b, fa, fb) in traj.segments() {
        let ea = Complex64::new(0.0, -omega * a).exp();
        let eb = Complex64::new(0.0, -omega * b).exp();
        let inv_len = 1.0 / (b - a);
        for comp in 0..2 {
            // int_a^b (f_a + m (t-a)) e^{-i omega t} dt
            //   = i (f_b e^{-i omega b} - f_a e^{-i omega a}) / omega
            //     + m (e^{-i omega b} - e^{-i omega a}) / omega^2
            let slope = (fb[comp] - fa[comp]) * inv_len;
            total[comp] += Complex64::i() * (fb[comp] * eb - fa[comp] * ea) / omega
                + slope * (eb - ea) / (omega * omega);
        }
    }
    Ok(total)
}

/// Squared magnitude of the contour transform, cm^2.
pub fn contour_transform_sq(traj: &TrajectoryPair, omega: f64) -> Result<f64> {
    let x = contour_velocity_transform(traj, omega)?;
    Ok(x[0].norm_sqr() + x[1].norm_sqr())
}

/// Mode integral Re Phi = (2 hbar c / 3 pi) int k dk |transform|^2 over
/// k = omega/c in [omega_min/c, omega_max/c]; adaptive quadrature at
/// relative tolerance 1e-8. Units: erg cm.
pub fn re_phi(traj: &TrajectoryPair, omega_min: f64, omega_max: f64) -> Result<f64> {
    if !(omega_min > 0.0 && omega_min < omega_max && omega_max.is_finite()) {
        return Err(Error::Domain(format!(
            "need 0 < omega_min < omega_max finite, got [{omega_min}, {omega_max}]"
        )));
    }
    let k = constants();
    let (before, after) = traj.leg_differences();
    if before == Vec2::new(0.0, 0.0) && after == Vec2::new(0.0, 0.0) {
        return Ok(0.0);
    }
    let integrand = |omega: f64| -> f64 {
        omega * contour_transform_sq(traj, omega).expect("omega inside validated range")
    };
    let breaks = quad::log_breakpoints(omega_min, omega_max, 64, 20_000);
    let q = quad::integrate_seeded(integrand, &breaks, 1e-8, 2_000_000)?;
    Ok(2.0 * k.hbar / (3.0 * std::f64::consts::PI * k.c) * q.value)
}

/// Fringe visibility and its logarithm; the pattern phase shift is fixed at
/// zero (it vanishes at the screen center and plays no role elsewhere here).
#[derive(Debug, Clone, Copy)]
pub struct VisibilityResult {
    pub visibility: f64,
    pub log_visibility: f64,
    pub phase_zeta: f64,
}

impl VisibilityResult {
    fn from_log(log_visibility: f64) -> Self {
        VisibilityResult {
            visibility: log_visibility.exp(),
            log_visibility,
            phase_zeta: 0.0,
        }
    }
}

/// Closed-form visibility: log V = -Z^2 (16 alpha / 3 pi) (d / cT)^2 log(pi L/lambda),
/// built on the central-fringe kink (v1 - v2)^2 = (2d/T)^2.
pub fn visibility_closed_form(charge_number: f64, cfg: &ExperimentConfig) -> Result<VisibilityResult> {
    let log_term = positive_log_term(cfg)?;
    check_charge(charge_number)?;
    let k = constants();
    let ratio = cfg.slit_spacing() / cfg.ct();
    let log_v = -charge_number * charge_number
        * (16.0 * k.alpha / (3.0 * std::f64::consts::PI))
        * ratio
        * ratio
        * log_term;
    Ok(VisibilityResult::from_log(log_v))
}

/// Numerical visibility through the mode integral:
/// log V = -(Z^2 alpha / 2 hbar c) Re Phi with cutoffs
/// omega_min = 1/T and omega_max = e^{log term}/T (identically pi v/lambda
/// when the log term is not overridden). Independent oracle for the closed
/// form.
pub fn visibility_numeric(
    charge_number: f64,
    cfg: &ExperimentConfig,
    traj: &TrajectoryPair,
) -> Result<VisibilityResult> {
    let log_term = positive_log_term(cfg)?;
    check_charge(charge_number)?;
    if charge_number == 0.0 {
        return Ok(VisibilityResult::from_log(0.0));
    }
    let t = traj.total_time;
    let omega_min = 1.0 / t;
    let omega_max = log_term.exp() / t;
    let phi = re_phi(traj, omega_min, omega_max)?;
    let k = constants();
    let log_v = -charge_number * charge_number * k.alpha / (2.0 * k.hbar * k.c) * phi;
    Ok(VisibilityResult::from_log(log_v))
}

/// Charge scale where the fringes drop below 1/e^2:
/// Z2 = (cT / (d sqrt(alpha))) / sqrt(log(pi L/lambda)). This is the
/// convention the duality curve is parameterized by.
pub fn critical_charge_z2(cfg: &ExperimentConfig) -> Result<f64> {
    let log_term = positive_log_term(cfg)?;
    let k = constants();
    Ok(cfg.ct() / (cfg.slit_spacing() * k.alpha.sqrt()) / log_term.sqrt())
}

/// Exact solution of `visibility_closed_form = e^{-2}`:
/// sqrt(3 pi / 8) times the scale convention above.
pub fn critical_charge_z2_exact(cfg: &ExperimentConfig) -> Result<f64> {
    Ok((3.0 * std::f64::consts::PI / 8.0).sqrt() * critical_charge_z2(cfg)?)
}

/// Suppression factors for the zero-photon-emission subset of events.
#[derive(Debug, Clone, Copy)]
pub struct ZeroPhotonFactor {
    /// V^{1/2}: multiplies the zero-photon interference pattern.
    pub pattern_factor: f64,
    /// exp(log V / 4): single-path forward-scattering amplitude factor.
    pub single_path_factor: f64,
}

/// Zero-photon pattern suppression V^{1/2} and the per-path amplitude factor
/// exp(log V / 4).
pub fn zero_photon_factor(charge_number: f64, cfg: &ExperimentConfig) -> Result<ZeroPhotonFactor> {
    let v = visibility_closed_form(charge_number, cfg)?;
    Ok(ZeroPhotonFactor {
        pattern_factor: (0.5 * v.log_visibility).exp(),
        single_path_factor: (0.25 * v.log_visibility).exp(),
    })
}

fn check_charge(charge_number: f64) -> Result<()> {
    if !(charge_number >= 0.0 && charge_number.is_finite()) {
        return Err(Error::Domain(format!(
            "charge number must be nonnegative and finite, got {charge_number}"
        )));
    }
    Ok(())
}

fn positive_log_term(cfg: &ExperimentConfig) -> Result<f64> {
    let lt = cfg.log_term()?;
    if !(lt > 0.0) {
        return Err(Error::Domain(format!("log term must be positive, got {lt}")));
    }
    Ok(lt)
}
