//! The q-deformed torus integral
//! `(2πi)^{-3} ∮ ∏_{i<j} (y_i/y_j; q)_{a_ij} (q y_j/y_i; q)_{a_ij} dy/y`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quadrature::{QuadResult, QuadratureConfig};
use crate::error::{Error, Result};
use crate::qseries::{pochhammer_numeric, q_gamma, QContext};

/// `(x; q)_e (q/x; q)_e` on `x = e^{2πi k/m}`, `k = 0..m`.
fn pair_table(e: Complex64, m: usize, ctx: &QContext) -> Result<Vec<Complex64>> {
    (0..m)
        .map(|k| {
            let x = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
            Ok(pochhammer_numeric(x, e, ctx)? * pochhammer_numeric(ctx.q() / x, e, ctx)?)
        })
        .collect()
}

/// Trapezoid sum on an `m × m` grid with `y3 = 1`.
///
/// Pair `{1,2}` depends on `k1 - k2`, pair `{1,3}` on `k1` and pair `{2,3}` on
/// `k2`, so each factor is tabulated once.
fn trapezoid(a: [Complex64; 3], m: usize, ctx: &QContext) -> Result<Complex64> {
    // a_{12} = a3, a_{13} = a2, a_{23} = a1
    let t12 = pair_table(a[2], m, ctx)?;
    let t13 = pair_table(a[1], m, ctx)?;
    let t23 = pair_table(a[0], m, ctx)?;
    let mut total = Complex64::new(0.0, 0.0);
    for k1 in 0..m {
        let mut row = Complex64::new(0.0, 0.0);
        for k2 in 0..m {
            row += t12[(k1 + m - k2) % m] * t23[k2];
        }
        total += t13[k1] * row;
    }
    Ok(total / (m * m) as f64)
}

/// Quadrature of the q-torus integral. The identity needs `Re a_i > 0`; the
/// quadrature itself also accepts `a_i = 0`, where the pair factor is 1.
///
/// The integrand is analytic on the torus, so the uniform trapezoid rule
/// converges geometrically; the grid is doubled from `cfg.grid_points` until
/// two successive sums agree to `cfg.tolerance` (relative).
pub fn qtorus_lhs(a: [Complex64; 3], ctx: &QContext, cfg: &QuadratureConfig) -> Result<(Complex64, QuadResult)> {
    if a.iter().any(|x| !(x.re >= 0.0)) {
        return Err(Error::ConvergenceViolation(format!("q-torus integral needs Re a_i >= 0, got {a:?}")));
    }
    let mut m = cfg.grid_points;
    let mut prev = trapezoid(a, m, ctx)?;
    let mut err = f64::INFINITY;
    for _ in 0..cfg.refinement_limit {
        m *= 2;
        let next = trapezoid(a, m, ctx)?;
        err = (next - prev).norm();
        prev = next;
        if err <= cfg.tolerance * next.norm() {
            return Ok((next, QuadResult { value: next.re, error_estimate: err, converged: true }));
        }
    }
    Ok((prev, QuadResult { value: prev.re, error_estimate: err, converged: false }))
}

/// `Γ_q(Σa+1) ∏Γ_q(2a_i+1) / (∏Γ_q(a_i+1) ∏_{i<j} Γ_q(a_i+a_j+1))`.
pub fn qtorus_rhs(a: [Complex64; 3], ctx: &QContext) -> Result<Complex64> {
    let g = |z: Complex64| q_gamma(z, ctx);
    let one = Complex64::new(1.0, 0.0);
    let mut v = g(a[0] + a[1] + a[2] + one)?;
    for x in a {
        v *= g(2.0 * x + one)? / g(x + one)?;
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        v /= g(a[i] + a[j] + one)?;
    }
    Ok(v)
}
