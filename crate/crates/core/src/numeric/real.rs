//! The real torus integral
//! `J(a) = (2π)^{-3} ∫_{[-π,π]^3} |sin(θ1-θ2)|^{2a3} |sin(θ2-θ3)|^{2a1} |sin(θ3-θ1)|^{2a2} dθ`
//! and its rational form on `R^3`.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::gamma::gamma_complex;
use super::params::ParameterSet;
use super::quadrature::{midpoint_nodes, tanh_sinh, QuadResult, QuadratureConfig};
use crate::error::{Error, Result};

fn check_integrable(a: [f64; 3]) -> Result<()> {
    if a.iter().any(|&x| !(x > -0.5)) {
        return Err(Error::ConvergenceViolation(format!("need every a_i > -1/2, got {a:?}")));
    }
    Ok(())
}

/// `sin` of a distance to the nearest zero; `0^0 = 1` keeps `a_i = 0` exact.
fn sin_pow(d: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        d.sin().powf(e)
    }
}

/// Quadrature of `J(a)`.
///
/// Setting `u = θ1 - θ2`, `v = θ2 - θ3` and using π-periodicity,
/// `J = π^{-2} ∫_0^π ∫_0^π |sin u|^{2a3} |sin v|^{2a1} |sin(u+v)|^{2a2} dv du`.
/// The inner integral is split at `v = π - u`, where `sin(u+v)` vanishes, and
/// both levels use tanh-sinh.
pub fn real_triple_lhs(a: [f64; 3], cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_integrable(a)?;
    let [e1, e2, e3] = a.map(|x| 2.0 * x);
    let inner_ok = Cell::new(true);
    let outer = tanh_sinh(
        |u, ul, ur| {
            let left = tanh_sinh(|_, dl, dr| sin_pow(dl, e1) * sin_pow(dr, e2), 0.0, PI - u, cfg);
            let right = tanh_sinh(|_, dl, dr| sin_pow(dr, e1) * sin_pow(dl, e2), PI - u, PI, cfg);
            if !(left.converged && right.converged) {
                inner_ok.set(false);
            }
            sin_pow(ul.min(ur), e3) * (left.value + right.value)
        },
        0.0,
        PI,
        cfg,
    );
    Ok(QuadResult {
        value: outer.value / (PI * PI),
        error_estimate: outer.error_estimate / (PI * PI),
        converged: outer.converged && inner_ok.get(),
    })
}

/// The three closed forms of `J(a)`:
///
/// 1. `Γ(a1+1/2)Γ(a2+1/2)Γ(a3+1/2)Γ(Σa+1) / (Γ(1/2)^3 ∏_{i<j} Γ(a_i+a_j+1))`
/// 2. `∏Γ(2a_i+1) Γ(Σa+1) / (4^{Σa} ∏Γ(a_i+1) ∏_{i<j} Γ(a_i+a_j+1))`
/// 3. in `σ`-coordinates: `∏Γ((ν_i+1)/4) Γ((Σν+1)/4) / (Γ(1/2)^3 ∏Γ((1-σ_i)/2))`
pub fn real_triple_rhs_forms(a: [Complex64; 3]) -> Result<[Complex64; 3]> {
    let g = gamma_complex;
    let one = Complex64::new(1.0, 0.0);
    let sum = a[0] + a[1] + a[2];
    let pairs = g(a[0] + a[1] + one)? * g(a[1] + a[2] + one)? * g(a[2] + a[0] + one)?;
    let sqrt_pi3 = PI.powf(1.5);

    let mut f1 = g(sum + one)? / (sqrt_pi3 * pairs);
    let four_pow = if sum.im == 0.0 { Complex64::new(4f64.powf(sum.re), 0.0) } else { (sum * 4f64.ln()).exp() };
    let mut f2 = g(sum + one)? / (pairs * four_pow);
    for x in a {
        f1 *= g(x + 0.5)?;
        f2 *= g(2.0 * x + one)? / g(x + one)?;
    }

    let ps = ParameterSet::from_real_a(a);
    let nu = ps.nu();
    let mut f3 = g((nu[0] + nu[1] + nu[2] + one) / 4.0)? / sqrt_pi3;
    for (n, s) in nu.iter().zip(ps.sigma()) {
        f3 *= g((n + one) / 4.0)? / g((one - s) / 2.0)?;
    }
    Ok([f1, f2, f3])
}

/// Closed form of `J(a)` from the `4^Σa` form, which is free of `π` and exact at
/// integer `a`; fails with `RouteMismatch` if the three forms disagree beyond
/// `1e-12` relative.
pub fn real_triple_rhs(a: [Complex64; 3]) -> Result<Complex64> {
    let [f1, f2, f3] = real_triple_rhs_forms(a)?;
    for (name, other) in [("Γ(a+1/2)", f1), ("σ", f3)] {
        if (other - f2).norm() > 1e-12 * f2.norm() {
            return Err(Error::RouteMismatch(format!("{name} form gives {other}, 4^Σa form gives {f2}")));
        }
    }
    Ok(f2)
}

/// `𝓘(a1, a2, a3) = 8 ∫_{R^3} (1+x^2)^{-(a2+a3+1)} (1+y^2)^{-(a1+a3+1)}
/// (1+z^2)^{-(a1+a2+1)} |x-y|^{2a3} |x-z|^{2a2} |y-z|^{2a1} dx dy dz`,
/// which should equal `(2π)^3 J(a)`.
///
/// Evaluated by the midpoint rule in `x = tan α` (Jacobian `1 + x^2`) on grids
/// of `m, 2m, 4m, ...` points per axis, with Richardson extrapolation between
/// successive grids assuming an `h^2` error.
pub fn rational_form_real(a: [f64; 3], cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_integrable(a)?;
    let [a1, a2, a3] = a;
    let max_levels = cfg.refinement_limit.min(3);
    let mut m = cfg.grid_points;
    let mut prev_raw: Option<f64> = None;
    let mut prev_rich: Option<f64> = None;
    let mut last = QuadResult { value: f64::NAN, error_estimate: f64::INFINITY, converged: false };
    for _ in 0..=max_levels {
        let raw = rational_form_midpoint([a1, a2, a3], m);
        if let Some(p) = prev_raw {
            let rich = (4.0 * raw - p) / 3.0;
            let err = prev_rich.map_or((rich - raw).abs(), |r| (rich - r).abs());
            last = QuadResult { value: rich, error_estimate: err, converged: err <= cfg.tolerance * rich.abs() };
            if last.converged {
                return Ok(last);
            }
            prev_rich = Some(rich);
        } else {
            last = QuadResult { value: raw, error_estimate: f64::INFINITY, converged: false };
        }
        prev_raw = Some(raw);
        m *= 2;
    }
    Ok(last)
}

fn rational_form_midpoint(a: [f64; 3], m: usize) -> f64 {
    let [a1, a2, a3] = a;
    let (alpha, h) = midpoint_nodes(-FRAC_PI_2, FRAC_PI_2, m);
    let x: Vec<f64> = alpha.iter().map(|t| t.tan()).collect();
    let weight = |e: f64| -> Vec<f64> { x.iter().map(|v| (1.0 + v * v).powf(-e) * (1.0 + v * v) * h).collect() };
    let wx = weight(a2 + a3 + 1.0);
    let wy = weight(a1 + a3 + 1.0);
    let wz = weight(a1 + a2 + 1.0);
    let pair = |e: f64| -> Vec<f64> {
        let mut t = vec![0.0; m * m];
        for i in 0..m {
            for j in 0..m {
                let d = (x[i] - x[j]).abs();
                t[i * m + j] = if e == 0.0 { 1.0 } else { d.powf(e) };
            }
        }
        t
    };
    let pxy = pair(2.0 * a3);
    let pxz = pair(2.0 * a2);
    let pyz = pair(2.0 * a1);
    let mut total = 0.0;
    for i in 0..m {
        let mut si = 0.0;
        for j in 0..m {
            let mut sj = 0.0;
            let row_xz = &pxz[i * m..(i + 1) * m];
            let row_yz = &pyz[j * m..(j + 1) * m];
            for k in 0..m {
                sj += wz[k] * row_xz[k] * row_yz[k];
            }
            si += wy[j] * pxy[i * m + j] * sj;
        }
        total += wx[i] * si;
    }
    8.0 * total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::params::real3;

    #[test]
    fn closed_form_examples() {
        let v = real_triple_rhs(real3([1.0, 1.0, 1.0])).unwrap();
        assert!((v.re - 3.0 / 32.0).abs() < 1e-15);
        assert!((real_triple_rhs(real3([0.0; 3])).unwrap().re - 1.0).abs() < 1e-15);
        let v = real_triple_rhs(real3([0.5; 3])).unwrap();
        assert!((v.re - 0.238_732_414_637_843).abs() < 1e-14);
    }

    #[test]
    fn forms_agree_off_the_real_line() {
        let a = [Complex64::new(0.4, 0.3), Complex64::new(1.1, -0.2), Complex64::new(0.7, 0.0)];
        let [f1, f2, f3] = real_triple_rhs_forms(a).unwrap();
        assert!((f1 - f2).norm() < 1e-13 * f1.norm());
        assert!((f1 - f3).norm() < 1e-13 * f1.norm());
    }

    #[test]
    fn quadrature_examples() {
        let cfg = QuadratureConfig::default();
        let r = real_triple_lhs([1.0, 1.0, 1.0], &cfg).unwrap();
        assert!((r.value - 3.0 / 32.0).abs() < 1e-10, "{r:?}");
        let r = real_triple_lhs([0.0; 3], &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let r = real_triple_lhs([0.5, 1.0, 1.5], &cfg).unwrap();
        assert!(r.relative_error(0.108_075_929_218_493_62) < 1e-8, "{r:?}");
    }

    #[test]
    fn rejects_non_integrable() {
        assert!(real_triple_lhs([-0.6, 1.0, 1.0], &QuadratureConfig::default()).is_err());
    }

    #[test]
    fn rational_form_trivial_case() {
        let cfg = QuadratureConfig::new(16, 2, 1e-6).unwrap();
        let r = rational_form_real([0.0; 3], &cfg).unwrap();
        assert!((r.value / (2.0 * PI).powi(3) - 1.0).abs() < 1e-12);
    }
}
