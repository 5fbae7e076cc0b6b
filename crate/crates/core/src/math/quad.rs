//! Adaptive Gauss-Kronrod quadrature (G7-K15) with a worst-interval-first
//! refinement queue.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

// 15-point Kronrod abscissae on [-1, 1] (nonnegative half) and weights,
// with the embedded 7-point Gauss weights. Printed at full table precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub intervals: usize,
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(mid - dx) + f(mid + dx);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    kronrod *= half;
    gauss *= half;
    (kronrod, (kronrod - gauss).abs())
}

/// Integrate `f` over `[a, b]` to the requested relative tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64, max_intervals: usize) -> Result<Quadrature> {
    integrate_seeded(f, &[a, b], rel_tol, max_intervals)
}

/// Integrate over the range spanned by `breakpoints` (sorted ascending),
/// seeding the refinement queue with one panel per consecutive pair. Useful
/// when the caller knows the integrand's scale structure, e.g. log-spaced
/// panels for an oscillatory integrand with a 1/omega envelope.
pub fn integrate_seeded<F: Fn(f64) -> f64>(
    f: F,
    breakpoints: &[f64],
    rel_tol: f64,
    max_intervals: usize,
) -> Result<Quadrature> {
    if breakpoints.len() < 2 {
        return Err(Error::Domain("need at least two breakpoints".into()));
    }
    if breakpoints.windows(2).any(|w| !(w[0] < w[1])) || breakpoints.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("breakpoints must be finite and strictly increasing".into()));
    }
    if !(rel_tol > 0.0) {
        return Err(Error::Domain(format!("relative tolerance must be positive, got {rel_tol}")));
    }

    let mut heap = BinaryHeap::new();
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0usize;
    for w in breakpoints.windows(2) {
        let (v, e) = gauss_kronrod(&f, w[0], w[1]);
        evaluations += 15;
        value += v;
        error += e;
        heap.push(Panel { a: w[0], b: w[1], value: v, error: e });
    }

    let span = breakpoints[breakpoints.len() - 1] - breakpoints[0];
    let min_width = span * 1e-14;
    while error > rel_tol * value.abs().max(f64::MIN_POSITIVE) {
        if heap.len() >= max_intervals {
            return Err(Error::Numerics(format!(
                "quadrature did not converge within {max_intervals} intervals \
                 (value {value:.6e}, error estimate {error:.3e})"
            )));
        }
        let worst = heap.pop().expect("heap nonempty while error > 0");
        if worst.b - worst.a <= min_width {
            // Cannot meaningfully subdivide; accept this panel's estimate
            // and withdraw it from refinement.
            if worst.error >= error {
                break;
            }
            error -= worst.error;
            heap.push(Panel { error: 0.0, ..worst });
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gauss_kronrod(&f, worst.a, mid);
        let (v2, e2) = gauss_kronrod(&f, mid, worst.b);
        evaluations += 30;
        value += v1 + v2 - worst.value;
        error += e1 + e2 - worst.error;
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
    }

    if !value.is_finite() {
        return Err(Error::Numerics("quadrature produced a non-finite value".into()));
    }
    Ok(Quadrature { value, error_estimate: error, evaluations, intervals: heap.len() })
}

/// Log-spaced breakpoints covering [a, b], `per_decade` panels per decade,
/// capped at `max_points`. Requires 0 < a < b.
pub fn log_breakpoints(a: f64, b: f64, per_decade: usize, max_points: usize) -> Vec<f64> {
    assert!(a > 0.0 && b > a);
    let decades = (b / a).log10();
    let n = ((decades * per_decade as f64).ceil() as usize).clamp(1, max_points.max(2) - 1);
    let mut pts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = i as f64 / n as f64;
        pts.push(a * (b / a).powf(t));
    }
    *pts.first_mut().unwrap() = a;
    *pts.last_mut().unwrap() = b;
    pts
}
