use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A rational prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(Self(p))
    }

    pub fn get(&self) -> u64 {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        self.0 as f64
    }

    pub fn ln(&self) -> f64 {
        (self.0 as f64).ln()
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0)
    }

    /// `p^k` as an exact rational, `k` of either sign.
    pub fn pow(&self, k: i64) -> BigRational {
        let m = BigRational::from(num_traits::pow(self.to_bigint(), k.unsigned_abs() as usize));
        if k >= 0 {
            m
        } else {
            m.recip()
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiplicity of `p` in a nonzero integer.
fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// A rational number viewed as an element of `Q_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PAdicScalar {
    value: BigRational,
}

impl PAdicScalar {
    pub fn new(value: BigRational) -> Self {
        Self { value }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(BigRational::new(num.into(), den.into())))
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `v_p(x)`; `None` stands for `v_p(0) = ∞`.
    pub fn valuation(&self, p: Prime) -> Option<i64> {
        if self.value.is_zero() {
            return None;
        }
        let pb = p.to_bigint();
        Some(int_valuation(self.value.numer(), &pb) - int_valuation(self.value.denom(), &pb))
    }

    /// `|x|_p = p^{-v_p(x)}`, with `|0|_p = 0`.
    pub fn norm(&self, p: Prime) -> BigRational {
        match self.valuation(p) {
            None => BigRational::zero(),
            Some(v) => p.pow(-v),
        }
    }

    /// `ψ_p(x) = max(|x|_p, 1)`.
    pub fn psi(&self, p: Prime) -> BigRational {
        match self.valuation(p) {
            Some(v) if v < 0 => p.pow(-v),
            _ => BigRational::one(),
        }
    }

    /// True when `x ∈ Z_p`.
    pub fn is_integral(&self, p: Prime) -> bool {
        self.valuation(p).is_none_or(|v| v >= 0)
    }

    /// Residue of `x p^shift` modulo `p^modulus_exp`, for `x p^shift ∈ Z_p`.
    ///
    /// This is the digit block used to place `x` in a coset of `p^{N} Z_p`.
    pub fn residue(&self, p: Prime, shift: i64, modulus_exp: u32) -> Result<u64> {
        let scaled = PAdicScalar::new(&self.value * p.pow(shift));
        if !scaled.is_integral(p) {
            return Err(Error::DepthTooSmall(format!("{} * {p}^{shift} is not a {p}-adic integer", self.value)));
        }
        let m = num_traits::pow(p.to_bigint(), modulus_exp as usize);
        let num = scaled.value.numer().clone();
        let den = scaled.value.denom().clone();
        let inv = mod_inverse(&den, &m).expect("denominator is prime to p");
        let r = ((num * inv) % &m + &m) % &m;
        Ok(u64::try_from(r).expect("modulus fits in u64"))
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    use num_integer::Integer;
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(((e.x % m) + m) % m)
}

impl From<BigRational> for PAdicScalar {
    fn from(value: BigRational) -> Self {
        Self::new(value)
    }
}

impl fmt::Display for PAdicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The prime together with the truncation depths of the brute-force oracles.
///
/// The coset oracle works inside `p^{-M} Z_p` with cells `x0 + p^N Z_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PAdicContext {
    p: Prime,
    outer_depth: u32,
    inner_depth: u32,
}

impl PAdicContext {
    /// Default depths: `(5, 8)` for `p <= 3`, `(4, 6)` otherwise.
    pub fn new(p: Prime) -> Self {
        let (m, n) = if p.get() <= 3 { (5, 8) } else { (4, 6) };
        Self { p, outer_depth: m, inner_depth: n }
    }

    pub fn with_depths(p: Prime, outer_depth: u32, inner_depth: u32) -> Result<Self> {
        if outer_depth == 0 || inner_depth == 0 {
            return Err(Error::InvalidParameter("oracle depths must be at least 1".into()));
        }
        Ok(Self { p, outer_depth, inner_depth })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn outer_depth(&self) -> u32 {
        self.outer_depth
    }

    pub fn inner_depth(&self) -> u32 {
        self.inner_depth
    }
}
