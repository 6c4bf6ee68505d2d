use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient with the zero convention: `binomial(n, k) = 0` when
/// `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn checked_div(num: &ExactRational, den: &ExactRational) -> Result<ExactRational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den)
}

/// `∏ num! / ∏ den!` computed exactly; fails if the quotient is not an integer.
pub fn factorial_ratio(num: &[u64], den: &[u64]) -> Result<BigInt> {
    let n: BigInt = num.iter().map(|&k| factorial(k)).product();
    let d: BigInt = den.iter().map(|&k| factorial(k)).product();
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !(&n % &d).is_zero() {
        return Err(Error::NonDivisible(format!("factorial ratio {num:?}/{den:?} is not an integer")));
    }
    Ok(n / d)
}
