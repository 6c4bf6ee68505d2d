//! The triple integral over `Q_p^3` and its two-variable reduction.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use super::double::{j_closed, j_closed_exact};
use super::gamma::{gamma_qp, gamma_qp_exact, reciprocal_gamma_qp, reciprocal_gamma_qp_exact};
use super::scalar::Prime;
use crate::error::{Error, Result};

/// Exponents `(σ1, σ2, σ3)`; `ν_i = σ_i - σ_{i+1} - σ_{i+2}` cyclically.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentTriple {
    pub sigma: [Complex64; 3],
}

impl ExponentTriple {
    pub fn new(s1: Complex64, s2: Complex64, s3: Complex64) -> Self {
        Self { sigma: [s1, s2, s3] }
    }

    pub fn real(s1: f64, s2: f64, s3: f64) -> Self {
        Self::new(s1.into(), s2.into(), s3.into())
    }

    pub fn nu(&self, i: usize) -> Complex64 {
        self.sigma[i] - self.sigma[(i + 1) % 3] - self.sigma[(i + 2) % 3]
    }

    /// The `(a, b, c)` of `J` whose integrand is the two-variable one:
    /// `(-2σ1, -2σ2, -1-ν3)`.
    pub fn to_j(&self) -> (Complex64, Complex64, Complex64) {
        (-2.0 * self.sigma[0], -2.0 * self.sigma[1], -1.0 - self.nu(2))
    }

    pub fn permuted(&self, images: [usize; 3]) -> Self {
        Self { sigma: [self.sigma[images[0]], self.sigma[images[1]], self.sigma[images[2]]] }
    }
}

/// Both the two-variable integral `Ĩ` and the triple integral `I = (1 + 1/p) Ĩ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripleValue {
    pub reduced: Complex64,
    pub full: Complex64,
}

fn check_triple_region(s: &ExponentTriple) -> Result<()> {
    let total = s.sigma[0] + s.sigma[1] + s.sigma[2] - 1.0;
    if (0..3).any(|i| s.nu(i).re >= 0.0) || total.re <= 0.0 {
        return Err(Error::ConvergenceViolation(format!(
            "triple integral needs Re ν_i < 0 and Re(σ1+σ2+σ3) > 1, got σ = {:?}",
            s.sigma
        )));
    }
    Ok(())
}

/// `Ĩ = Γ(σ1+σ2+σ3-1) Γ(-ν1) Γ(-ν2) Γ(-ν3) / (Γ(2σ1) Γ(2σ2) Γ(2σ3))`, and `I`.
pub fn triple_closed(s: &ExponentTriple, p: Prime) -> Result<TripleValue> {
    check_triple_region(s)?;
    let [s1, s2, s3] = s.sigma;
    let mut reduced = gamma_qp(s1 + s2 + s3 - 1.0, p)?;
    for i in 0..3 {
        reduced *= gamma_qp(-s.nu(i), p)? * reciprocal_gamma_qp(2.0 * s.sigma[i], p);
    }
    let full = reduced * (1.0 + 1.0 / p.as_f64());
    Ok(TripleValue { reduced, full })
}

/// Exact `(Ĩ, I)` for integer `σ_i`.
pub fn triple_closed_exact(sigma: [i64; 3], p: Prime) -> Result<(BigRational, BigRational)> {
    let s = ExponentTriple::real(sigma[0] as f64, sigma[1] as f64, sigma[2] as f64);
    check_triple_region(&s)?;
    let nu = |i: usize| sigma[i] - sigma[(i + 1) % 3] - sigma[(i + 2) % 3];
    let mut reduced = gamma_qp_exact(sigma.iter().sum::<i64>() - 1, p)?;
    for i in 0..3 {
        reduced *= gamma_qp_exact(-nu(i), p)? * reciprocal_gamma_qp_exact(2 * sigma[i], p);
    }
    let full = &reduced * (BigRational::one() + p.pow(-1));
    Ok((reduced, full))
}

/// `Ĩ` computed as `J` at the parameter dictionary.
pub fn triple_via_j(s: &ExponentTriple, p: Prime) -> Result<Complex64> {
    let (a, b, c) = s.to_j();
    j_closed(a, b, c, p)
}

pub fn triple_via_j_exact(sigma: [i64; 3], p: Prime) -> Result<BigRational> {
    let nu3 = sigma[2] - sigma[0] - sigma[1];
    j_closed_exact(-2 * sigma[0], -2 * sigma[1], -1 - nu3, p)
}
