//! The complex plane integral
//! `I_2(a) = ∫_{C^2} (1+|z1|^2)^{-2-a2-a3} (1+|z2|^2)^{-2-a1-a3} |z1-z2|^{2a3} dz1 dz2`.

use std::cell::Cell;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::gamma_complex;
use super::params::ParameterSet;
use super::quadrature::{tanh_sinh, QuadResult, QuadratureConfig};
use crate::algebra::binomial;
use crate::error::{Error, Result};

/// Quadrature of `I_2(a)`.
///
/// Polar coordinates, `r_k^2 = v_k / (1 - v_k)` and the angle difference `δ`
/// turn the integral into
/// `π ∫_0^1 ∫_0^1 ∫_0^π (1-v1)^{a2} (1-v2)^{a1} N^{a3} dδ dv2 dv1` with
/// `N = (√(v1(1-v2)) - √(v2(1-v1)))^2 + 4 √(v1 v2 (1-v1)(1-v2)) sin^2(δ/2)`.
/// `N` vanishes only at `v1 = v2, δ = 0`, so `v2` is split at `v1` and every
/// level uses tanh-sinh.
pub fn complex_pair_lhs(a: [f64; 3], cfg: &QuadratureConfig) -> Result<QuadResult> {
    let [a1, a2, a3] = a;
    if !(a1 > -1.0 && a2 > -1.0 && a3 >= 0.0) {
        return Err(Error::ConvergenceViolation(format!("numeric path needs a1, a2 > -1 and a3 >= 0, got {a:?}")));
    }
    let ok = Cell::new(true);
    let track = |r: QuadResult| {
        if !r.converged {
            ok.set(false);
        }
        r.value
    };
    // v1, 1 - v1, v2, 1 - v2 and v1 - v2, all without cancellation
    let angular = |v1: f64, w1: f64, v2: f64, w2: f64, diff: f64| -> f64 {
        let s1 = (v1 * w2).sqrt();
        let s2 = (v2 * w1).sqrt();
        let d = if s1 + s2 > 0.0 { diff / (s1 + s2) } else { 0.0 };
        let cross = 4.0 * (v1 * v2 * w1 * w2).sqrt();
        if a3 == 0.0 {
            return PI;
        }
        track(tanh_sinh(
            |_, dl, _| {
                let s = (0.5 * dl).sin();
                (d * d + cross * s * s).powf(a3)
            },
            0.0,
            PI,
            cfg,
        ))
    };
    let outer = tanh_sinh(
        |v1, _, w1| {
            let below =
                track(tanh_sinh(|v2, _, gap| (w1 + gap).powf(a1) * angular(v1, w1, v2, w1 + gap, gap), 0.0, v1, cfg));
            let above = track(tanh_sinh(|v2, gap, w2| w2.powf(a1) * angular(v1, w1, v2, w2, -gap), v1, 1.0, cfg));
            w1.powf(a2) * (below + above)
        },
        0.0,
        1.0,
        cfg,
    );
    Ok(QuadResult {
        value: PI * outer.value,
        error_estimate: PI * outer.error_estimate,
        converged: outer.converged && ok.get(),
    })
}

/// `π^2 Γ(Σa+2) Γ(a1+1) Γ(a2+1) Γ(a3+1) / (Γ(a1+a2+2) Γ(a1+a3+2) Γ(a2+a3+2))`.
pub fn complex_pair_rhs(a: [Complex64; 3]) -> Result<Complex64> {
    let g = gamma_complex;
    let two = Complex64::new(2.0, 0.0);
    let mut v = g(a[0] + a[1] + a[2] + two)? * PI * PI;
    for x in a {
        v *= g(x + 1.0)?;
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        v /= g(a[i] + a[j] + two)?;
    }
    Ok(v)
}

/// The triple integral in `σ`-coordinates,
/// `I = π^3 Γ(σ1+σ2+σ3-1) Γ(-ν1) Γ(-ν2) Γ(-ν3) / (Γ(2σ1) Γ(2σ2) Γ(2σ3))`.
pub fn complex_triple_sigma(ps: &ParameterSet) -> Result<Complex64> {
    let g = gamma_complex;
    let s = ps.sigma();
    let mut v = g(s[0] + s[1] + s[2] - 1.0)? * PI.powi(3);
    for (n, si) in ps.nu().iter().zip(s) {
        v *= g(-n)? / g(2.0 * si)?;
    }
    Ok(v)
}

/// `I_2` computed from the `σ`-form: the triple integral is `π` times the
/// two-variable one, and `a_i = -1 - ν_i`.
pub fn complex_pair_rhs_sigma(ps: &ParameterSet) -> Result<Complex64> {
    Ok(complex_triple_sigma(ps)? / PI)
}

/// `∫_0^∞ (1+r^2)^b r^{1+2a} dr = Γ(a+1) Γ(-a-b-1) / (2 Γ(-b))`.
pub fn beta_radial(a: Complex64, b: Complex64) -> Result<Complex64> {
    Ok(gamma_complex(a + 1.0)? * gamma_complex(-a - b - 1.0)? / (2.0 * gamma_complex(-b)?))
}

/// `I_2` for natural `a3` by expanding the angular average into
/// `Σ_i binom(a3, i)^2 r1^{2i} r2^{2a3-2i}` and applying [`beta_radial`] twice.
pub fn complex_pair_via_radial(a1: Complex64, a2: Complex64, a3: u32) -> Result<Complex64> {
    let n = a3 as f64;
    let b1 = -2.0 - a2 - n;
    let b2 = -2.0 - a1 - n;
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..=a3 {
        let c: f64 = num_traits::ToPrimitive::to_f64(&binomial(a3 as i64, i as i64)).unwrap();
        sum += c * c * beta_radial((i as f64).into(), b1)? * beta_radial(((a3 - i) as f64).into(), b2)?;
    }
    Ok(4.0 * PI * PI * sum)
}
