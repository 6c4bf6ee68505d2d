//! `F(a, c; y) = ∫_{Q_p} ψ_p(x)^a |x - y|_p^c d_px`: closed form and a coset
//! enumeration oracle that shares no code with it.

use num_complex::Complex64;
use num_rational::BigRational;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::gamma::{gamma_qp, gamma_qp_exact, gamma_qp_infinity, p_pow, reciprocal_gamma_qp_exact};
use super::scalar::{PAdicContext, PAdicScalar, Prime};
use crate::error::{Error, Result};

/// Largest coset count the oracle will enumerate.
pub const MAX_ORACLE_CELLS: u64 = 1 << 27;

/// An oracle estimate and a rigorous bound on what it leaves out.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

impl OracleValue {
    pub fn contains(&self, exact: Complex64, slack: f64) -> bool {
        (self.value - exact).norm() <= self.tail_bound + slack
    }
}

pub(crate) fn check_f_region(a: Complex64, c: Complex64) -> Result<()> {
    if !(c.re > -1.0 && (a + c).re < -1.0) {
        return Err(Error::ConvergenceViolation(format!("F needs Re c > -1 and Re(a+c) < -1, got a = {a}, c = {c}")));
    }
    Ok(())
}

/// `Γ(u)(1 - p^{-k u})` for `k = n + 1 <= 0`, rewritten as the finite sum
/// `-(1 - 1/p) Σ_{j=1}^{-k} p^{j u}` when `u` sits on a pole.
fn gamma_times_one_minus(u: Complex64, k: i64, p: Prime) -> Result<Complex64> {
    match gamma_qp(u, p) {
        Ok(g) => Ok(g * (1.0 - p_pow(p, -u * k as f64))),
        Err(_) => {
            let s: Complex64 = (1..=-k).map(|j| p_pow(p, u * j as f64)).sum();
            Ok(-s * (1.0 - 1.0 / p.as_f64()))
        }
    }
}

/// Closed form of `F`.
///
/// For `v_p(y) >= 0` this is `Γ(c+1) - Γ(a+c+1)`. For `v_p(y) = n < 0`, with
/// `R = p^{-n}` and `s = a + c + 1`:
///
/// `F = R^s [Γ(c+1) - Γ(s)] + R^c Γ(∞) / Γ(n(a+1)+1) - R^c Γ(∞) Γ(a+1) / Γ((n+1)(a+1))`.
pub fn f_closed(a: Complex64, c: Complex64, y: &PAdicScalar, p: Prime) -> Result<Complex64> {
    check_f_region(a, c)?;
    let one = Complex64::new(1.0, 0.0);
    let s = a + c + one;
    let head = gamma_qp(c + one, p)? - gamma_qp(s, p)?;
    let n = match y.valuation(p) {
        Some(n) if n < 0 => n,
        _ => return Ok(head),
    };
    let u = a + one;
    let r_pow = |z: Complex64| p_pow(p, -z * n as f64);
    // Γ(∞)/Γ(nu + 1) = 1 - p^{-nu-1}
    let first = one - r_pow(u) / p.as_f64();
    let second = gamma_times_one_minus(u, n + 1, p)?;
    Ok(r_pow(s) * head + r_pow(c) * (first - second))
}

/// Exact closed form at integer exponents.
pub fn f_closed_exact(a: i64, c: i64, y: &PAdicScalar, p: Prime) -> Result<BigRational> {
    check_f_region(Complex64::new(a as f64, 0.0), Complex64::new(c as f64, 0.0))?;
    let s = a + c + 1;
    let head = gamma_qp_exact(c + 1, p)? - gamma_qp_exact(s, p)?;
    let n = match y.valuation(p) {
        Some(n) if n < 0 => n,
        _ => return Ok(head),
    };
    let u = a + 1;
    let inf = gamma_qp_infinity(p);
    let first = &inf * reciprocal_gamma_qp_exact(n * u + 1, p);
    let second = if u == 0 {
        // limit of Γ(u)(1 - p^{-(n+1)u}) as u -> 0
        &inf * BigRational::from_integer((n + 1).into())
    } else {
        &inf * gamma_qp_exact(u, p)? * reciprocal_gamma_qp_exact((n + 1) * u, p)
    };
    Ok(p.pow(-n * s) * head + p.pow(-n * c) * (first - second))
}

/// The `v_p(y) < 0` formula with `Γ(n(a+1))` in the last denominator instead of
/// `Γ((n+1)(a+1))`. It disagrees with the integral; kept so tests can show where.
pub fn f_closed_uncorrected_exact(a: i64, c: i64, y: &PAdicScalar, p: Prime) -> Result<BigRational> {
    let n = match y.valuation(p) {
        Some(n) if n < 0 => n,
        _ => return f_closed_exact(a, c, y, p),
    };
    let s = a + c + 1;
    let inf = gamma_qp_infinity(p);
    let head = gamma_qp_exact(c + 1, p)? - gamma_qp_exact(s, p)?;
    let first = &inf * reciprocal_gamma_qp_exact(n * (a + 1) + 1, p);
    let second = &inf * gamma_qp_exact(a + 1, p)? * reciprocal_gamma_qp_exact(n * (a + 1), p);
    Ok(p.pow(-n * s) * head + p.pow(-n * c) * (first - second))
}

fn u64_valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0);
    if p == 2 {
        return n.trailing_zeros();
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Brute-force `F` by enumerating the `p^{M+N}` cosets `x0 + p^N Z_p` of
/// `p^{-M} Z_p`.
///
/// On every cell not containing `y` the integrand is constant, so the cells are
/// counted by the pair `(v_p(x0), v_p(x0 - y))` and each class is weighted once.
/// The cell containing `y` and the region `|x|_p > p^M` are not summed; both
/// are bounded geometrically and reported in `tail_bound`, together with a
/// floating-point rounding allowance.
pub fn f_oracle(a: Complex64, c: Complex64, y: &PAdicScalar, ctx: &PAdicContext) -> Result<OracleValue> {
    check_f_region(a, c)?;
    let p = ctx.p();
    let pu = p.get();
    let m = ctx.outer_depth();
    let n = ctx.inner_depth();
    if let Some(v) = y.valuation(p) {
        if v < -(m as i64) {
            return Err(Error::DepthTooSmall(format!("v_p(y) = {v} lies outside p^-{m} Z_p; raise the outer depth")));
        }
    }
    let total = pu
        .checked_pow(m + n)
        .filter(|&t| t <= MAX_ORACLE_CELLS)
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{} cells exceed the oracle budget", m + n)))?;
    let y_cell = y.residue(p, m as i64, m + n)?;

    // counts[i][j]: i = min(v(x0), 0) + M in 0..=M, j = v(x0 - y) + M in 0..M+N
    let width = (m + n) as usize;
    let rows = m as usize + 1;
    let chunk = 1u64 << 16;
    let chunks = total.div_ceil(chunk);
    let count_chunk = |k: u64| {
        let mut h = vec![0u64; rows * width];
        let lo = k * chunk;
        let hi = (lo + chunk).min(total);
        for j in lo..hi {
            if j == y_cell {
                continue;
            }
            let vx = if j == 0 { m } else { u64_valuation(j, pu).min(m) };
            let d = (j + total - y_cell) % total;
            let vd = u64_valuation(d, pu);
            h[vx as usize * width + vd as usize] += 1;
        }
        h
    };
    let merge = |mut acc: Vec<u64>, h: Vec<u64>| {
        acc.iter_mut().zip(h).for_each(|(x, y)| *x += y);
        acc
    };
    #[cfg(feature = "parallel")]
    let counts = (0..chunks).into_par_iter().map(count_chunk).reduce(|| vec![0u64; rows * width], merge);
    #[cfg(not(feature = "parallel"))]
    let counts = (0..chunks).map(count_chunk).fold(vec![0u64; rows * width], merge);

    let cell = p_pow(p, Complex64::new(-(n as f64), 0.0));
    let mut value = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for i in 0..rows {
        let vx = i as f64 - m as f64;
        for j in 0..width {
            let count = counts[i * width + j];
            if count == 0 {
                continue;
            }
            let vd = j as f64 - m as f64;
            let term = cell * count as f64 * p_pow(p, -a * vx) * p_pow(p, -c * vd);
            magnitude += term.norm();
            value += term;
        }
    }

    let pf = p.as_f64();
    let mut tail = 64.0 * f64::EPSILON * magnitude;
    let psi_y: f64 = num_traits::ToPrimitive::to_f64(&y.psi(p)).unwrap();
    let cp1 = c.re + 1.0;
    tail += psi_y.powf(a.re) * pf.powf(-(n as f64) * cp1) * (1.0 - 1.0 / pf) / (1.0 - pf.powf(-cp1));
    let r = pf.powf(1.0 + (a + c).re);
    tail += (1.0 - 1.0 / pf) * r.powi(m as i32 + 1) / (1.0 - r);
    Ok(OracleValue { value, tail_bound: tail })
}

/// Smallest depths for which the geometric parts of the [`f_oracle`] tail bound
/// are each at most `target / 2`.
pub fn f_oracle_depths(a: Complex64, c: Complex64, y: &PAdicScalar, p: Prime, target: f64) -> Result<PAdicContext> {
    check_f_region(a, c)?;
    let pf = p.as_f64();
    let half = target / 2.0;
    let r = pf.powf(1.0 + (a + c).re);
    let mut m = 1u32.max(y.valuation(p).map_or(0, |v| (-v).max(0) as u32));
    while (1.0 - 1.0 / pf) * r.powi(m as i32 + 1) / (1.0 - r) > half {
        m += 1;
    }
    let psi_y: f64 = num_traits::ToPrimitive::to_f64(&y.psi(p)).unwrap();
    let cp1 = c.re + 1.0;
    let mut n = 1u32;
    while psi_y.powf(a.re) * pf.powf(-(n as f64) * cp1) * (1.0 - 1.0 / pf) / (1.0 - pf.powf(-cp1)) > half {
        n += 1;
    }
    PAdicContext::with_depths(p, m, n)
}
