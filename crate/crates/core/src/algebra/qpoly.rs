use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `q^k`. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `q^k`; fails unless the `k` lowest coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible(format!("{self} is not divisible by q^{k}")));
        }
        Ok(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Multiply by `q^k` for any integer `k`, requiring divisibility when `k < 0`.
    pub fn shift(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.shift_up(k as usize))
        } else {
            self.shift_down(k.unsigned_abs() as usize)
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den` in `Z[q]`.
    ///
    /// Fails with [`Error::NonDivisible`] if `den` does not divide `self` with an
    /// integer-coefficient quotient.
    pub fn div_exact(&self, den: &QPolynomial) -> Result<QPolynomial> {
        let lead = den.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(Self::zero()) } else { Err(Error::NonDivisible(format!("{self} / {den}"))) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible(format!("{self} / {den}")));
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible(format!("{self} / {den}")));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + BigRational::from(c.clone()))
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * q + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, q: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * q + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for QPolynomial {
    /// Canonical rendering `c0 + c1*q + c2*q^2 - c3*q^3`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn normalisation_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn exact_division_examples() {
        // (1 - q^2) / (1 - q) = 1 + q
        assert_eq!(p(&[1, 0, -1]).div_exact(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        // [4]! / ([2]! [2]!) = 1 + q + 2q^2 + q^3 + q^4
        let f2 = p(&[1, 1]);
        let f4 = &(&p(&[1, 1]) * &p(&[1, 1, 1])) * &p(&[1, 1, 1, 1]);
        assert_eq!(f4.div_exact(&(&f2 * &f2)).unwrap(), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn division_errors() {
        assert_eq!(p(&[1, 1]).div_exact(&QPolynomial::zero()), Err(Error::DivisionByZero));
        assert!(matches!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), Err(Error::NonDivisible(_))));
        assert!(matches!(p(&[1]).div_exact(&p(&[0, 2])), Err(Error::NonDivisible(_))));
        assert!(matches!(p(&[1, 2]).div_exact(&p(&[1, 2, 3])), Err(Error::NonDivisible(_))));
        assert!(matches!(p(&[1, 1]).div_exact(&p(&[0, 2])), Err(Error::NonDivisible(_))));
    }

    #[test]
    fn shifts() {
        let f = p(&[0, 0, 3, 1]);
        assert_eq!(f.shift_down(2).unwrap(), p(&[3, 1]));
        assert!(f.shift_down(3).is_err());
        assert_eq!(f.shift(-1).unwrap().shift(1).unwrap(), f);
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[1, 2, 2, 1]).to_string(), "1 + 2*q + 2*q^2 + 1*q^3");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-1*q + 3*q^3");
        assert_eq!(p(&[-2]).to_string(), "-2");
    }

    #[test]
    fn evaluation() {
        let f = p(&[1, 2, 2, 1]);
        assert_eq!(f.eval_at_one(), BigInt::from(6));
        assert!((f.eval_f64(0.5) - 2.625).abs() < 1e-15);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.eval_rational(&half), BigRational::new(21.into(), 8.into()));
    }

    fn arb_poly() -> impl Strategy<Value = QPolynomial> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(|v| QPolynomial::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a.clone());
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!(prod.degree(), Some(da + db));
            }
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &a), &QPolynomial::zero());
        }
    }
}
