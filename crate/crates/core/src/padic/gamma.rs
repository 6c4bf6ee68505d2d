//! The local Gamma factor `Γ_{Q_p}(s) = (1 - p^{-1}) / (1 - p^{-s})`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use super::scalar::Prime;
use crate::error::{Error, Result};

/// Below this, `|1 - p^{-s}|` counts as a pole.
const POLE_GUARD: f64 = 1e-13;

/// `p^z = exp(z ln p)`.
pub fn p_pow(p: Prime, z: Complex64) -> Complex64 {
    (z * p.ln()).exp()
}

fn one_minus_inv_p(p: Prime) -> BigRational {
    BigRational::one() - p.pow(-1)
}

pub fn gamma_qp(s: Complex64, p: Prime) -> Result<Complex64> {
    let den = Complex64::new(1.0, 0.0) - p_pow(p, -s);
    if den.norm() < POLE_GUARD {
        return Err(Error::PoleEncountered(format!("Γ_Q{p}({s}) has a pole")));
    }
    Ok(Complex64::new(1.0 - 1.0 / p.as_f64(), 0.0) / den)
}

/// Exact value at an integer argument; `s = 0` is the only integer pole.
pub fn gamma_qp_exact(s: i64, p: Prime) -> Result<BigRational> {
    if s == 0 {
        return Err(Error::PoleEncountered(format!("Γ_Q{p}(0) has a pole")));
    }
    Ok(one_minus_inv_p(p) / (BigRational::one() - p.pow(-s)))
}

/// `1 / Γ_{Q_p}(s)`, an entire function of `s`.
pub fn reciprocal_gamma_qp(s: Complex64, p: Prime) -> Complex64 {
    (Complex64::new(1.0, 0.0) - p_pow(p, -s)) / (1.0 - 1.0 / p.as_f64())
}

pub fn reciprocal_gamma_qp_exact(s: i64, p: Prime) -> BigRational {
    (BigRational::one() - p.pow(-s)) / one_minus_inv_p(p)
}

/// `Γ_{Q_p}(∞) = 1 - p^{-1}`.
pub fn gamma_qp_infinity(p: Prime) -> BigRational {
    one_minus_inv_p(p)
}

/// `∫_{Q_p} ψ_p(x)^e d_px` for an integer `e <= -2`, summed shell by shell in
/// exact arithmetic: `1 + (1 - p^{-1}) Σ_{k>=1} p^{k(1+e)}`.
pub fn psi_moment_exact(e: i64, p: Prime) -> Result<BigRational> {
    if e > -2 {
        return Err(Error::ConvergenceViolation(format!("∫ψ_p^e diverges for e = {e}; need e <= -2")));
    }
    let r = p.pow(1 + e);
    let tail = &r / (BigRational::one() - &r);
    Ok(BigRational::one() + one_minus_inv_p(p) * tail)
}

/// Partial shell sum of `∫ ψ_p^e` over `|x|_p <= p^K`, exact.
pub fn psi_moment_partial(e: i64, p: Prime, k_max: u32) -> BigRational {
    let mut acc = BigRational::one();
    for k in 1..=k_max as i64 {
        acc += one_minus_inv_p(p) * p.pow(k * (1 + e));
    }
    acc
}
