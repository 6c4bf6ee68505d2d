//! `J(a, b, c) = ∫∫ ψ_p(x)^a ψ_p(y)^b |x - y|_p^c d_px d_py`.

use num_complex::Complex64;
use num_rational::BigRational;

use super::gamma::{gamma_qp, gamma_qp_exact, p_pow, reciprocal_gamma_qp, reciprocal_gamma_qp_exact};
use super::hypergeometric::{f_closed, OracleValue};
use super::scalar::{PAdicContext, PAdicScalar, Prime};
use crate::error::{Error, Result};

/// `c+1`, `-a-c-1`, `-b-c-1` and `-a-b-c-2` must all have positive real part.
pub(crate) fn check_j_region(a: Complex64, b: Complex64, c: Complex64) -> Result<()> {
    let args = [c + 1.0, -a - c - 1.0, -b - c - 1.0, -a - b - c - 2.0];
    if args.iter().any(|z| z.re <= 0.0) {
        return Err(Error::ConvergenceViolation(format!(
            "J needs Re(c+1), Re(-a-c-1), Re(-b-c-1), Re(-a-b-c-2) > 0; got a = {a}, b = {b}, c = {c}"
        )));
    }
    Ok(())
}

/// Closed form
/// `Γ(c+1) Γ(-a-c-1) Γ(-b-c-1) Γ(-a-b-c-2) / (Γ(-a) Γ(-b) Γ(-a-b-2c-2))`
/// with `Γ = Γ_{Q_p}`; the denominator goes through the entire `1/Γ`.
pub fn j_closed(a: Complex64, b: Complex64, c: Complex64, p: Prime) -> Result<Complex64> {
    check_j_region(a, b, c)?;
    let num = gamma_qp(c + 1.0, p)?
        * gamma_qp(-a - c - 1.0, p)?
        * gamma_qp(-b - c - 1.0, p)?
        * gamma_qp(-a - b - c - 2.0, p)?;
    Ok(num * reciprocal_gamma_qp(-a, p) * reciprocal_gamma_qp(-b, p) * reciprocal_gamma_qp(-a - b - 2.0 * c - 2.0, p))
}

pub fn j_closed_exact(a: i64, b: i64, c: i64, p: Prime) -> Result<BigRational> {
    let z = |x: i64| Complex64::new(x as f64, 0.0);
    check_j_region(z(a), z(b), z(c))?;
    let num = gamma_qp_exact(c + 1, p)?
        * gamma_qp_exact(-a - c - 1, p)?
        * gamma_qp_exact(-b - c - 1, p)?
        * gamma_qp_exact(-a - b - c - 2, p)?;
    Ok(num
        * reciprocal_gamma_qp_exact(-a, p)
        * reciprocal_gamma_qp_exact(-b, p)
        * reciprocal_gamma_qp_exact(-a - b - 2 * c - 2, p))
}

/// Shell sum of `∫ ψ_p(y)^b F(a, c; y) d_py` over `v_p(y) ∈ [-M, N]`, with `F`
/// from its closed form and the ball `p^{N+1} Z_p` added at `y = 0`.
///
/// For `v_p(y) = -k < -M`, `|F| <= A R^{Re c} + B R^{Re(a+c+1)}` with
/// `R = p^k`, `A = |1 - Γ(a+1)|` and
/// `B = |Γ(c+1) - Γ(a+c+1) + Γ(a+1) p^{-a-1} - 1/p|`, so the omitted shells are
/// bounded by two geometric series.
pub fn j_oracle(a: Complex64, b: Complex64, c: Complex64, ctx: &PAdicContext) -> Result<OracleValue> {
    check_j_region(a, b, c)?;
    let p = ctx.p();
    let pf = p.as_f64();
    let m = ctx.outer_depth() as i64;
    let n = ctx.inner_depth() as i64;
    let unit = 1.0 - 1.0 / pf;

    let mut value = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut add = |z: Complex64| {
        magnitude += z.norm();
        value += z;
    };
    for k in -m..=n {
        let y = PAdicScalar::new(p.pow(k));
        let measure = unit * pf.powi(-k as i32);
        let psi_b = if k < 0 { p_pow(p, -b * k as f64) } else { Complex64::new(1.0, 0.0) };
        add(psi_b * f_closed(a, c, &y, p)? * measure);
    }
    add(f_closed(a, c, &PAdicScalar::from_int(0), p)? * pf.powi(-(n as i32) - 1));

    let one = Complex64::new(1.0, 0.0);
    let gu =
        gamma_qp(a + one, p).map_err(|_| Error::PoleEncountered("j_oracle tail bound needs Γ(a+1) finite".into()))?;
    let s = a + c + one;
    let coef_c = (one - gu).norm();
    let coef_s = (gamma_qp(c + one, p)? - gamma_qp(s, p)? + gu * p_pow(p, -(a + one)) - 1.0 / pf).norm();
    let r1 = pf.powf(1.0 + b.re + c.re);
    let r2 = pf.powf(1.0 + b.re + s.re);
    let geo = |r: f64| r.powi(m as i32 + 1) / (1.0 - r);
    let tail = unit * (coef_c * geo(r1) + coef_s * geo(r2)) + 64.0 * f64::EPSILON * magnitude;
    Ok(OracleValue { value, tail_bound: tail })
}
