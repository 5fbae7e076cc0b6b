//! Interference-pattern synthesis: two-path amplitudes, decohered screen
//! intensity, particle-by-particle Monte Carlo buildup, fringe-contrast
//! recovery, and the duality curve.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decoherence::visibility_closed_form;
use crate::error::{Error, Result};
use crate::experiment::ExperimentConfig;
use crate::pathinfo::distinguishability_of_charge;

/// Optional transverse beam profile applied to both path amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    None,
    Gaussian { sigma: f64 },
}

impl Envelope {
    fn amplitude(&self, b: f64) -> f64 {
        match self {
            Envelope::None => 1.0,
            Envelope::Gaussian { sigma } => (-0.5 * (b / sigma) * (b / sigma)).exp(),
        }
    }
}

/// Screen discretization for pattern synthesis and sampling.
#[derive(Debug, Clone, Copy)]
pub struct PatternConfig {
    pub experiment: ExperimentConfig,
    pub n_points: usize,
    pub screen_halfwidth: f64,
    pub envelope: Envelope,
}

impl PatternConfig {
    pub fn new(
        experiment: ExperimentConfig,
        n_points: usize,
        screen_halfwidth: f64,
        envelope: Envelope,
    ) -> Result<Self> {
        if n_points < 2 {
            return Err(Error::Config(format!("need at least 2 screen bins, got {n_points}")));
        }
        if !(screen_halfwidth > 0.0 && screen_halfwidth.is_finite()) {
            return Err(Error::Config(format!(
                "screen halfwidth must be positive and finite, got {screen_halfwidth}"
            )));
        }
        if let Envelope::Gaussian { sigma } = envelope {
            if !(sigma > 0.0 && sigma.is_finite()) {
                return Err(Error::Config(format!("envelope sigma must be positive, got {sigma}")));
            }
        }
        Ok(PatternConfig { experiment, n_points, screen_halfwidth, envelope })
    }
}

/// Equal-magnitude path amplitudes at screen position `b`, relative phase
/// 2 pi b / fringe spacing, each carrying the envelope. The position is
/// expected inside [-halfwidth, halfwidth]; the formula extends smoothly.
pub fn baseline_amplitudes(pcfg: &PatternConfig, b: f64) -> (Complex64, Complex64) {
    let phase = std::f64::consts::PI * b / pcfg.experiment.fringe_spacing();
    let magnitude = pcfg.envelope.amplitude(b) / std::f64::consts::SQRT_2;
    (
        Complex64::from_polar(magnitude, phase),
        Complex64::from_polar(magnitude, -phase),
    )
}

/// Total normalized screen intensity: envelope^2 * (1 + V cos(2 pi b / fringe)).
/// Nonnegative, so it doubles as the sampling density.
pub fn intensity(pcfg: &PatternConfig, charge_number: f64, b: f64) -> Result<f64> {
    let v = visibility_closed_form(charge_number, &pcfg.experiment)?.visibility;
    let (upper, lower) = baseline_amplitudes(pcfg, b);
    let incoherent = upper.norm_sqr() + lower.norm_sqr();
    let cross = 2.0 * (lower.conj() * upper).re;
    Ok(incoherent + v * cross)
}

/// The interference cross term alone, V cos(2 pi b / fringe): the relative
/// modulation around the incoherent background (envelope cancels in the
/// ratio).
pub fn intensity_cross_term(pcfg: &PatternConfig, charge_number: f64, b: f64) -> Result<f64> {
    let v = visibility_closed_form(charge_number, &pcfg.experiment)?.visibility;
    let (upper, lower) = baseline_amplitudes(pcfg, b);
    let incoherent = upper.norm_sqr() + lower.norm_sqr();
    Ok(2.0 * (lower.conj() * upper).re / incoherent * v)
}

/// Binned screen counts.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    screen_halfwidth: f64,
    counts: Vec<u64>,
}

impl Histogram {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn n_bins(&self) -> usize {
        self.counts.len()
    }

    pub fn bin_width(&self) -> f64 {
        2.0 * self.screen_halfwidth / self.counts.len() as f64
    }

    pub fn bin_center(&self, i: usize) -> f64 {
        -self.screen_halfwidth + (i as f64 + 0.5) * self.bin_width()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn screen_halfwidth(&self) -> f64 {
        self.screen_halfwidth
    }
}

/// Build up the pattern one particle at a time: i.i.d. positions drawn from
/// the binned intensity by inverse CDF. Deterministic for a given seed.
pub fn monte_carlo_pattern(
    pcfg: &PatternConfig,
    charge_number: f64,
    n_particles: u64,
    seed: u64,
) -> Result<Histogram> {
    let n_bins = pcfg.n_points;
    let mut density = Vec::with_capacity(n_bins);
    let bin_width = 2.0 * pcfg.screen_halfwidth / n_bins as f64;
    for i in 0..n_bins {
        let b = -pcfg.screen_halfwidth + (i as f64 + 0.5) * bin_width;
        let d = intensity(pcfg, charge_number, b)?;
        density.push(d.max(0.0));
    }
    let total: f64 = density.iter().sum();
    if !(total > 0.0) {
        return Err(Error::Numerics("screen density vanishes everywhere".into()));
    }
    let mut cdf = Vec::with_capacity(n_bins);
    let mut acc = 0.0;
    for d in &density {
        acc += d / total;
        cdf.push(acc);
    }
    *cdf.last_mut().unwrap() = 1.0;

    let mut counts = vec![0u64; n_bins];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n_particles {
        let u: f64 = rng.gen();
        let bin = cdf.partition_point(|&c| c <= u).min(n_bins - 1);
        counts[bin] += 1;
    }
    Ok(Histogram { screen_halfwidth: pcfg.screen_halfwidth, counts })
}

/// Fringe-contrast estimate from a histogram.
#[derive(Debug, Clone, Copy)]
pub struct VisibilityEstimate {
    /// 2 |histogram Fourier component at 1/fringe| / total counts.
    pub value: f64,
    /// Fringe periods covered by the histogram span.
    pub periods_spanned: f64,
}

impl VisibilityEstimate {
    /// Below three full periods the DC-fringe leakage degrades the estimate.
    pub fn is_reliable(&self) -> bool {
        self.periods_spanned >= 3.0
    }
}

/// Recover the fringe visibility as twice the ratio of the discrete Fourier
/// component at spatial frequency 1/fringe to the zero-frequency component.
/// Unbiased for the cosine model on whole-period spans.
pub fn recover_visibility(hist: &Histogram, fringe_spacing: f64) -> VisibilityEstimate {
    let mut component = Complex64::new(0.0, 0.0);
    let mut total = 0.0;
    for (i, &c) in hist.counts().iter().enumerate() {
        let b = hist.bin_center(i);
        let phase = -2.0 * std::f64::consts::PI * b / fringe_spacing;
        component += Complex64::from_polar(c as f64, phase);
        total += c as f64;
    }
    let value = if total > 0.0 { 2.0 * component.norm() / total } else { 0.0 };
    VisibilityEstimate {
        value,
        periods_spanned: 2.0 * hist.screen_halfwidth() / fringe_spacing,
    }
}

/// One sample of the duality curve.
#[derive(Debug, Clone, Copy)]
pub struct DualityPoint {
    pub charge_number: f64,
    pub visibility: f64,
    pub distinguishability: f64,
    /// V^2 + D^2.
    pub duality_sum: f64,
}

/// Evaluate (V, D, V^2 + D^2) on a nonnegative sorted charge grid.
pub fn duality_curve(cfg: &ExperimentConfig, z_grid: &[f64]) -> Result<Vec<DualityPoint>> {
    if z_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("charge grid must be sorted ascending".into()));
    }
    if z_grid.first().is_some_and(|&z| z < 0.0) {
        return Err(Error::Domain("charge grid must be nonnegative".into()));
    }
    z_grid
        .iter()
        .map(|&z| {
            let v = visibility_closed_form(z, cfg)?.visibility;
            let d = distinguishability_of_charge(z, cfg)?;
            Ok(DualityPoint {
                charge_number: z,
                visibility: v,
                distinguishability: d,
                duality_sum: v * v + d * d,
            })
        })
        .collect()
}
