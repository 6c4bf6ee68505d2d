use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Grid size, refinement budget and relative tolerance for a quadrature.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub grid_points: usize,
    pub refinement_limit: u32,
    pub tolerance: f64,
}

impl QuadratureConfig {
    pub fn new(grid_points: usize, refinement_limit: u32, tolerance: f64) -> Result<Self> {
        if grid_points < 8 {
            return Err(Error::InvalidParameter(format!("need at least 8 grid points, got {grid_points}")));
        }
        if !(tolerance > 0.0) {
            return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tolerance}")));
        }
        Ok(Self { grid_points, refinement_limit, tolerance })
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { grid_points: 8, refinement_limit: 8, tolerance: 1e-11 }
    }
}

/// A quadrature estimate. When `converged` is false, `value` is the last
/// refinement and `error_estimate` the last change between refinements.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
}

impl QuadResult {
    pub fn relative_error(&self, exact: f64) -> f64 {
        (self.value - exact).abs() / exact.abs()
    }
}

/// Half-width of the tanh-sinh parameter range; beyond it the nodes are within
/// `e^{-85}` of the endpoints relative to the interval length.
const T_MAX: f64 = 4.0;

/// Tanh-sinh (double exponential) rule on `[a, b]`.
///
/// The integrand receives `(x, x - a, b - x)`, the two distances being computed
/// without cancellation, so endpoint singularities such as `|sin x|^{2a}` can be
/// evaluated from the distance rather than from `x`. The step starts at
/// `T_MAX / grid_points` and is halved, reusing previous nodes, until two
/// successive sums agree to `tolerance` (relative) or the refinement budget is
/// spent.
pub fn tanh_sinh<F: FnMut(f64, f64, f64) -> f64>(mut f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> QuadResult {
    let width = b - a;
    if width == 0.0 {
        return QuadResult { value: 0.0, error_estimate: 0.0, converged: true };
    }
    let mut node = |t: f64| -> f64 {
        let y = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * y.abs()).exp();
        let near = width * e / (1.0 + e);
        if near <= 0.0 {
            return 0.0;
        }
        let far = width / (1.0 + e);
        let w = width * std::f64::consts::PI * t.cosh() * e / ((1.0 + e) * (1.0 + e));
        let v = if t > 0.0 {
            f(b - near, far, near)
        } else if t < 0.0 {
            f(a + near, near, far)
        } else {
            f(a + 0.5 * width, 0.5 * width, 0.5 * width)
        };
        w * v
    };

    let mut h = T_MAX / cfg.grid_points as f64;
    let n0 = cfg.grid_points as i64;
    let mut raw = node(0.0);
    for k in 1..=n0 {
        let t = k as f64 * h;
        raw += node(t) + node(-t);
    }
    let mut sum = h * raw;
    let mut err = f64::INFINITY;
    for level in 1..=cfg.refinement_limit {
        h *= 0.5;
        let count = n0 << level;
        let mut fresh = 0.0;
        for k in (1..count).step_by(2) {
            let t = k as f64 * h;
            fresh += node(t) + node(-t);
        }
        raw += fresh;
        let next = h * raw;
        err = (next - sum).abs();
        sum = next;
        if err <= cfg.tolerance * sum.abs().max(f64::MIN_POSITIVE) {
            return QuadResult { value: sum, error_estimate: err, converged: true };
        }
    }
    QuadResult { value: sum, error_estimate: err, converged: false }
}

/// Midpoint nodes `a + (i + 1/2) h` of `[a, b]` split into `n` cells, with `h`.
pub fn midpoint_nodes(a: f64, b: f64, n: usize) -> (Vec<f64>, f64) {
    let h = (b - a) / n as f64;
    ((0..n).map(|i| a + (i as f64 + 0.5) * h).collect(), h)
}
