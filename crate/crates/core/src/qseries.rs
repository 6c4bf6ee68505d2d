//! q-combinatorics (exact, over `Z[q]`) and q-analysis (numeric, `0 < q < 1`).

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::algebra::{LaurentPolynomial, QPolynomial};
use crate::error::{Error, Result};

/// Default relative truncation threshold for infinite q-products.
pub const DEFAULT_TRUNCATION_EPSILON: f64 = 1e-14;

/// Numeric deformation parameter `q` with its product truncation threshold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QContext {
    q: f64,
    truncation_epsilon: f64,
}

impl QContext {
    pub fn new(q: f64) -> Result<Self> {
        Self::with_epsilon(q, DEFAULT_TRUNCATION_EPSILON)
    }

    pub fn with_epsilon(q: f64, truncation_epsilon: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParameter(format!("q must lie in (0, 1), got {q}")));
        }
        if !(truncation_epsilon > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "truncation epsilon must be positive, got {truncation_epsilon}"
            )));
        }
        Ok(Self { q, truncation_epsilon })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn truncation_epsilon(&self) -> f64 {
        self.truncation_epsilon
    }

    /// `q^a = exp(a ln q)` with the real logarithm of `q`.
    pub fn q_pow(&self, a: Complex64) -> Complex64 {
        (a * self.q.ln()).exp()
    }

    /// First `K` with `q^K * scale < epsilon * (1 - q)`.
    fn truncation_index(&self, scale: f64) -> usize {
        let target = self.truncation_epsilon * (1.0 - self.q) / scale.max(1.0);
        // q^K < target  <=>  K > ln(target) / ln(q)
        let k = (target.ln() / self.q.ln()).floor() + 1.0;
        k.max(1.0) as usize
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: u32) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigInt::from(1); n as usize])
}

/// `[a]!_q = ∏_{i=1}^{a} [i]_q`, of degree `a(a-1)/2`.
pub fn q_factorial(a: u32) -> QPolynomial {
    (1..=a).fold(QPolynomial::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[a choose b]_q`, zero when `b < 0` or `b > a`.
pub fn q_binomial(a: i64, b: i64) -> Result<QPolynomial> {
    if a < 0 {
        return Err(Error::InvalidParameter(format!("q_binomial needs a >= 0, got {a}")));
    }
    if b < 0 || b > a {
        return Ok(QPolynomial::zero());
    }
    let den = &q_factorial(b as u32) * &q_factorial((a - b) as u32);
    q_factorial(a as u32).div_exact(&den)
}

/// Coefficients (in a formal variable `t`) of `(t; q)_a = ∏_{i=0}^{a-1} (1 - t q^i)`.
///
/// Entry `k` is the `Z[q]` coefficient of `t^k`.
pub fn finite_pochhammer_poly(a: u32) -> Vec<QPolynomial> {
    let mut coeffs = vec![QPolynomial::one()];
    for i in 0..a as usize {
        // multiply by (1 - q^i t)
        let factor = QPolynomial::monomial(-1, i);
        let mut next = coeffs.clone();
        next.push(QPolynomial::zero());
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += &(c * &factor);
        }
        coeffs = next;
    }
    coeffs
}

/// Right-hand side of Kadell's expansion as a Laurent polynomial in one
/// variable `x` (stored in the first exponent slot):
/// `sum_{i=-a}^{b} q^{i(i+1)/2} [a+b choose a+i]_q (-x)^i`.
pub fn kadell_expansion(a: u32, b: u32) -> Result<LaurentPolynomial> {
    let (a, b) = (a as i64, b as i64);
    let mut terms = Vec::with_capacity((a + b + 1) as usize);
    for i in -a..=b {
        let weight = (i * (i + 1) / 2) as usize;
        let mut coeff = q_binomial(a + b, a + i)?.shift_up(weight);
        if i.rem_euclid(2) == 1 {
            coeff = -coeff;
        }
        terms.push(([i as i32, 0, 0], coeff));
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

/// Direct expansion of `(qx; q)_b (x^{-1}; q)_a`, the left-hand side of
/// Kadell's expansion.
pub fn kadell_direct_product(a: u32, b: u32) -> LaurentPolynomial {
    // (qx; q)_b: substitute t = q x, so t^k contributes q^k x^k.
    let forward: Vec<QPolynomial> = finite_pochhammer_poly(b).iter().enumerate().map(|(k, c)| c.shift_up(k)).collect();
    let left = LaurentPolynomial::substitute(&forward, [1, 0, 0]);
    let right = LaurentPolynomial::substitute(&finite_pochhammer_poly(a), [-1, 0, 0]);
    &left * &right
}

/// Analytic q-Pochhammer symbol `(x; q)_a = (x; q)_∞ / (x q^a; q)_∞`.
///
/// Both infinite products are truncated at the same index `K`, the first with
/// `q^K max(1, |x|, |x q^a|) < epsilon (1 - q)`.
pub fn pochhammer_numeric(x: Complex64, a: Complex64, ctx: &QContext) -> Result<Complex64> {
    if a.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let shifted = x * ctx.q_pow(a);
    let k_max = ctx.truncation_index(x.norm().max(shifted.norm()));
    // ratio accumulated factor by factor; the two products separately underflow for q near 1
    let mut ratio = Complex64::new(1.0, 0.0);
    let mut qi = 1.0;
    for i in 0..k_max {
        let d = Complex64::new(1.0, 0.0) - shifted * qi;
        if d.norm() < 8.0 * f64::EPSILON {
            return Err(Error::PoleEncountered(format!("(x q^a; q)_inf vanishes at factor {i} for x = {x}, a = {a}")));
        }
        ratio *= (Complex64::new(1.0, 0.0) - x * qi) / d;
        qi *= ctx.q;
    }
    Ok(ratio)
}

/// `Γ_q(x) = (1 - q)^{1-x} (q; q)_∞ / (q^x; q)_∞`.
pub fn q_gamma(x: Complex64, ctx: &QContext) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    // (q; q)_∞ / (q^x; q)_∞ = (q; q)_{x-1}
    let ratio = pochhammer_numeric(Complex64::new(ctx.q, 0.0), x - one, ctx)
        .map_err(|_| Error::PoleEncountered(format!("Γ_q has a pole at x = {x}")))?;
    let prefactor = ((one - x) * (1.0 - ctx.q).ln()).exp();
    Ok(prefactor * ratio)
}
