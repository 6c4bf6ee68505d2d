//! Both sides of the exact constant-term and binomial identities, decided by
//! exact arithmetic only.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{binomial, factorial, factorial_ratio, LaurentPolynomial, QPolynomial};
use crate::error::{Error, Result};
use crate::qseries::{finite_pochhammer_poly, kadell_expansion, q_binomial, q_factorial};

/// Three natural exponents `(a1, a2, a3)`.
///
/// The pair `{i, j}` carries the exponent of the remaining index:
/// `a_{ij} = a_k` with `{k} = {1, 2, 3} \ {i, j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NaturalTriple(pub [u32; 3]);

impl NaturalTriple {
    pub fn new(a1: u32, a2: u32, a3: u32) -> Self {
        Self([a1, a2, a3])
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Exponent of the pair `{i, j}` (0-based indices).
    pub fn pair(&self, i: usize, j: usize) -> u32 {
        self.0[third_index(i, j)]
    }

    /// All triples with entries in `0..=max`, in lexicographic order.
    pub fn all_up_to(max: u32) -> impl Iterator<Item = NaturalTriple> {
        (0..=max).flat_map(move |a| (0..=max).flat_map(move |b| (0..=max).map(move |c| NaturalTriple::new(a, b, c))))
    }

    pub fn permuted(&self, s: &Permutation3) -> Self {
        Self([self.0[s.apply(0)], self.0[s.apply(1)], self.0[s.apply(2)]])
    }
}

impl fmt::Display for NaturalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

fn third_index(i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < 3 && j < 3);
    3 - i - j
}

/// A bijection of `{0, 1, 2}` (printed 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation3([usize; 3]);

impl Permutation3 {
    pub fn new(images: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &x in &images {
            if x > 2 || seen[x] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation of 0..3")));
            }
            seen[x] = true;
        }
        Ok(Self(images))
    }

    pub fn identity() -> Self {
        Self([0, 1, 2])
    }

    /// The cycle `1 -> 2 -> 3 -> 1`.
    pub fn cycle() -> Self {
        Self([1, 2, 0])
    }

    pub fn all() -> [Permutation3; 6] {
        [Self([0, 1, 2]), Self([0, 2, 1]), Self([1, 0, 2]), Self([1, 2, 0]), Self([2, 0, 1]), Self([2, 1, 0])]
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Parses the one-line notation `"123"`, `"231"`, ... (1-based images).
    pub fn parse(s: &str) -> Result<Self> {
        let digits: Vec<usize> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidParameter(format!("bad permutation {s:?}")))?;
        if digits.len() != 3 || digits.contains(&0) {
            return Err(Error::InvalidParameter(format!("bad permutation {s:?}")));
        }
        Self::new([digits[0] - 1, digits[1] - 1, digits[2] - 1])
    }
}

impl fmt::Display for Permutation3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0] + 1, self.0[1] + 1, self.0[2] + 1)
    }
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn ratio_exponent(i: usize, j: usize) -> [i32; 3] {
    let mut e = [0; 3];
    e[i] = 1;
    e[j] = -1;
    e
}

/// `(1 - t)^n` as coefficients in `t`.
fn one_minus_t_pow(n: u32) -> Vec<QPolynomial> {
    (0..=n as i64)
        .map(|k| {
            let c = binomial(n as i64, k);
            QPolynomial::constant(if k % 2 == 0 { c } else { -c })
        })
        .collect()
}

/// Constant term of `∏_{i<j} (1 - y_i/y_j)^{a_ij} (1 - y_j/y_i)^{a_ij}`.
pub fn dyson_ct_lhs(a: NaturalTriple) -> BigInt {
    let mut factors = Vec::with_capacity(6);
    for (i, j) in PAIRS {
        let poly = one_minus_t_pow(a.pair(i, j));
        factors.push(LaurentPolynomial::substitute(&poly, ratio_exponent(i, j)));
        factors.push(LaurentPolynomial::substitute(&poly, ratio_exponent(j, i)));
    }
    let ct = LaurentPolynomial::constant_term_of_product(&factors);
    debug_assert!(ct.degree().unwrap_or(0) == 0);
    ct.coeff(0)
}

/// `(a1+a2+a3)! ∏(2a_i)! / (∏ a_i! ∏_{i<j} (a_i+a_j)!)`; fails if not an integer.
pub fn dyson_rhs(a: NaturalTriple) -> Result<BigInt> {
    let [a1, a2, a3] = a.0.map(u64::from);
    factorial_ratio(&[a1 + a2 + a3, 2 * a1, 2 * a2, 2 * a3], &[a1, a2, a3, a1 + a2, a1 + a3, a2 + a3])
}

/// Constant term of `∏_{i<j} (y_i/y_j; q)_{a_ij} (q y_j/y_i; q)_{a_{σ(i)σ(j)}}`.
///
/// With `σ` the identity this is the q-Dyson product.
pub fn morris_ct_lhs(a: NaturalTriple, sigma: Permutation3) -> QPolynomial {
    let mut factors = Vec::with_capacity(6);
    for (i, j) in PAIRS {
        let forward = finite_pochhammer_poly(a.pair(i, j));
        factors.push(LaurentPolynomial::substitute(&forward, ratio_exponent(i, j)));
        // (q t; q)_n: t^k picks up q^k.
        let backward: Vec<QPolynomial> = finite_pochhammer_poly(a.pair(sigma.apply(i), sigma.apply(j)))
            .iter()
            .enumerate()
            .map(|(k, c)| c.shift_up(k))
            .collect();
        factors.push(LaurentPolynomial::substitute(&backward, ratio_exponent(j, i)));
    }
    LaurentPolynomial::constant_term_of_product(&factors)
}

/// `[a1+a2+a3]! ∏[a_i + a_σ(i)]! / (∏[a_i]! ∏_{i<j}[a_i+a_j]!)` by exact division.
pub fn morris_rhs(a: NaturalTriple, sigma: Permutation3) -> Result<QPolynomial> {
    let [a1, a2, a3] = a.0;
    let mut num = q_factorial(a1 + a2 + a3);
    for i in 0..3 {
        num = &num * &q_factorial(a.get(i) + a.get(sigma.apply(i)));
    }
    let mut den = QPolynomial::one();
    for x in [a1, a2, a3, a1 + a2, a1 + a3, a2 + a3] {
        den = &den * &q_factorial(x);
    }
    num.div_exact(&den)
}

fn min3(a: u32, b: u32, c: u32) -> i64 {
    a.min(b).min(c) as i64
}

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `sum_n (-1)^n C(a+b, a+n) C(b+c, b+n) C(a+c, c+n)`, summed over
/// `|n| <= min(a, b, c)` (every other term vanishes).
pub fn dixon_lhs(a: u32, b: u32, c: u32) -> BigInt {
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    let m = min3(a, b, c);
    (-m..=m).map(|n| sign(n) * binomial(ai + bi, ai + n) * binomial(bi + ci, bi + n) * binomial(ai + ci, ci + n)).sum()
}

/// `(a+b+c)! / (a! b! c!)`.
pub fn dixon_rhs(a: u32, b: u32, c: u32) -> BigInt {
    let (a, b, c) = (a as u64, b as u64, c as u64);
    factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c))
}

/// Constant term of the Dyson product read off coefficient-wise: the terms with
/// zero exponent are indexed by one integer `n`, giving
/// `sum_n (-1)^n C(2a1, a1+n) C(2a2, a2+n) C(2a3, a3+n)`.
pub fn dyson_via_dixon_sum(a: NaturalTriple) -> BigInt {
    let [a1, a2, a3] = a.0;
    let m = min3(a1, a2, a3);
    let [x, y, z] = a.0.map(i64::from);
    (-m..=m).map(|n| sign(n) * binomial(2 * x, x + n) * binomial(2 * y, y + n) * binomial(2 * z, z + n)).sum()
}

/// The same sum factored as `(2a)!(2b)!(2c)! / ((a+b)!(a+c)!(b+c)!)` times
/// Dixon's alternating sum.
pub fn dyson_via_dixon_factored(a: NaturalTriple) -> Result<BigInt> {
    let [a1, a2, a3] = a.0;
    let [x, y, z] = a.0.map(u64::from);
    let prefactor = fact_q(2 * x) * fact_q(2 * y) * fact_q(2 * z) / (fact_q(x + y) * fact_q(x + z) * fact_q(y + z));
    let value = prefactor * BigRational::from(dixon_lhs(a1, a2, a3));
    if !value.is_integer() {
        return Err(Error::NonDivisible(format!("Dixon-factored Dyson value {value} at a=({a})")));
    }
    Ok(value.to_integer())
}

fn q_sign_weight(n: i64) -> (bool, usize) {
    // (-1)^n q^{n(3n+1)/2}; the exponent is a nonnegative integer for every n.
    (n.rem_euclid(2) == 1, (n * (3 * n + 1) / 2) as usize)
}

fn q_factorial_product(xs: &[u32]) -> QPolynomial {
    xs.iter().fold(QPolynomial::one(), |acc, &x| &acc * &q_factorial(x))
}

/// q-Dixon, first form: returns `(lhs, rhs)` with
/// `lhs = sum_n (-1)^n q^{n(3n+1)/2} [a+b, a+n][b+c, b+n][c+a, c+n]` and
/// `rhs = [a+b+c]! / ([a]![b]![c]!)`.
pub fn q_dixon_v1(a: u32, b: u32, c: u32) -> Result<(QPolynomial, QPolynomial)> {
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    let m = min3(a, b, c);
    let mut lhs = QPolynomial::zero();
    for n in -m..=m {
        let (neg, w) = q_sign_weight(n);
        let term = &(&q_binomial(ai + bi, ai + n)? * &q_binomial(bi + ci, bi + n)?) * &q_binomial(ci + ai, ci + n)?;
        let term = term.shift_up(w);
        lhs += &if neg { -term } else { term };
    }
    let rhs = q_factorial(a + b + c).div_exact(&q_factorial_product(&[a, b, c]))?;
    Ok((lhs, rhs))
}

/// q-Dixon, second form: `lhs = sum_n (-1)^n q^{n(3n+1)/2} [2a, a+n][2b, b+n][2c, c+n]`
/// and `rhs = [2a]![2b]![2c]![a+b+c]! / ([a]![b]![c]![a+b]![b+c]![a+c]!)`.
pub fn q_dixon_v2(a: u32, b: u32, c: u32) -> Result<(QPolynomial, QPolynomial)> {
    let lhs = q_dixon_v2_sum(a, b, c)?;
    let num = q_factorial_product(&[2 * a, 2 * b, 2 * c, a + b + c]);
    let den = q_factorial_product(&[a, b, c, a + b, b + c, a + c]);
    Ok((lhs, num.div_exact(&den)?))
}

fn q_dixon_v2_sum(a: u32, b: u32, c: u32) -> Result<QPolynomial> {
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    let m = min3(a, b, c);
    let mut lhs = QPolynomial::zero();
    for n in -m..=m {
        let (neg, w) = q_sign_weight(n);
        let term = &(&q_binomial(2 * ai, ai + n)? * &q_binomial(2 * bi, bi + n)?) * &q_binomial(2 * ci, ci + n)?;
        let term = term.shift_up(w);
        lhs += &if neg { -term } else { term };
    }
    Ok(lhs)
}

/// Constrained constant term of
/// `F(u, v, w) = (qu;q)_a (u^{-1};q)_a (qv;q)_b (v^{-1};q)_b (qw;q)_c (w^{-1};q)_c`
/// on `uvw = q^{-1}` with `a = a3, b = a1, c = a2`.
///
/// Each double product is replaced by its Kadell expansion, the three are
/// multiplied as a Laurent polynomial in `(u, v, w)`, and the diagonal
/// coefficients at `u^n v^n w^n` are summed with weight `q^{-n}`.
pub fn ct_derivation(a: NaturalTriple) -> Result<QPolynomial> {
    let [a1, a2, a3] = a.0;
    let (ka, kb, kc) = (kadell_expansion(a3, a3)?, kadell_expansion(a1, a1)?, kadell_expansion(a2, a2)?);
    let place = |f: &LaurentPolynomial, slot: usize| {
        LaurentPolynomial::from_terms(f.terms().map(|(e, c)| {
            let mut exp = [0; 3];
            exp[slot] = e[0];
            (exp, c.clone())
        }))
    };
    let product = &(&place(&ka, 0) * &place(&kb, 1)) * &place(&kc, 2);
    let mut ct = QPolynomial::zero();
    for (e, c) in product.terms() {
        if e[0] == e[1] && e[1] == e[2] {
            ct += &c.shift(-(e[0] as i64))?;
        }
    }
    Ok(ct)
}

/// Compares the constrained constant term with the q-Dixon second-form sum and
/// with the direct q-Dyson constant term.
pub fn ct_derivation_check(a: NaturalTriple) -> Result<bool> {
    let derived = ct_derivation(a)?;
    let [a1, a2, a3] = a.0;
    // b = a1, c = a2, a = a3 in the q-Dixon labelling
    let dixon = q_dixon_v2_sum(a3, a1, a2)?;
    Ok(derived == dixon && derived == morris_ct_lhs(a, Permutation3::identity()))
}

/// Coefficients of `φ_a(r1, r2) = sum_i C(a, i)^2 r1^{2i} r2^{2a-2i}`; entry `i`
/// multiplies `r1^{2i} r2^{2a-2i}`.
pub fn phi_polynomial(a: u32) -> Vec<BigInt> {
    (0..=a as i64).map(|i| binomial(a as i64, i).pow(2)).collect()
}

/// `φ_a` recomputed as `CT_z (r1 - r2 z)^a (r1 - r2/z)^a` by Laurent expansion,
/// with exponents `(z, r1, r2)`.
pub fn phi_polynomial_via_ct(a: u32) -> Vec<BigInt> {
    let one = QPolynomial::one();
    let left = LaurentPolynomial::from_terms([([0, 1, 0], one.clone()), ([1, 0, 1], -one.clone())]).pow(a);
    let right = LaurentPolynomial::from_terms([([0, 1, 0], one.clone()), ([-1, 0, 1], -one)]).pow(a);
    let prod = &left * &right;
    (0..=a as i32).map(|i| prod.coefficient(&[0, 2 * i, 2 * (a as i32) - 2 * i]).coeff(0)).collect()
}

/// `(sum_{i=0}^{a3} C(a1+i, a1) C(a2+a3-i, a2), C(a1+a2+a3+1, a3))`.
pub fn binomial_convolution(a: NaturalTriple) -> (BigInt, BigInt) {
    let [a1, a2, a3] = a.0.map(i64::from);
    let lhs = (0..=a3).map(|i| binomial(a1 + i, a1) * binomial(a2 + a3 - i, a2)).sum();
    (lhs, binomial(a1 + a2 + a3 + 1, a3))
}

fn fact_q(n: u64) -> BigRational {
    BigRational::from(factorial(n))
}

/// Coefficient of `π²` in the complex double integral at natural `a`, via the
/// radial expansion: `Γ(a3+1)² Γ(a1+1) Γ(a2+1) / (Γ(a2+a3+2) Γ(a1+a3+2))` times
/// the binomial convolution sum.
pub fn complex_route_radial(a: NaturalTriple) -> BigRational {
    let [a1, a2, a3] = a.0.map(u64::from);
    let prefactor = fact_q(a3) * fact_q(a3) * fact_q(a1) * fact_q(a2) / (fact_q(a2 + a3 + 1) * fact_q(a1 + a3 + 1));
    let (sum, _) = binomial_convolution(a);
    prefactor * BigRational::from(sum)
}

/// The radial route before the binomial simplification: the prefactor
/// `Γ(a3+1)² / (Γ(a2+a3+2) Γ(a1+a3+2))` times
/// `sum_i Γ(1-i+a2+a3) Γ(1+i+a1) / (Γ(i+1) Γ(a3-i+1))`.
pub fn complex_route_radial_gamma_sum(a: NaturalTriple) -> BigRational {
    let [a1, a2, a3] = a.0.map(u64::from);
    let prefactor = fact_q(a3) * fact_q(a3) / (fact_q(a2 + a3 + 1) * fact_q(a1 + a3 + 1));
    let sum: BigRational = (0..=a3)
        .map(|i| fact_q(a2 + a3 - i) * fact_q(a1 + i) / (fact_q(i) * fact_q(a3 - i)))
        .fold(BigRational::zero(), |acc, x| acc + x);
    prefactor * sum
}

/// Coefficient of `π²` from the Gamma ratio
/// `Γ(a1+a2+a3+2) ∏Γ(a_i+1) / (Γ(a1+a2+2) Γ(a1+a3+2) Γ(a2+a3+2))` at natural `a`.
pub fn complex_route_gamma(a: NaturalTriple) -> BigRational {
    let [a1, a2, a3] = a.0.map(u64::from);
    fact_q(a1 + a2 + a3 + 1) * fact_q(a1) * fact_q(a2) * fact_q(a3)
        / (fact_q(a1 + a2 + 1) * fact_q(a1 + a3 + 1) * fact_q(a2 + a3 + 1))
}

/// Both routes for the complex integral at natural `a`; returns their common
/// value or [`Error::RouteMismatch`].
pub fn complex_exact_eval(a: NaturalTriple) -> Result<BigRational> {
    let radial = complex_route_radial(a);
    let unsimplified = complex_route_radial_gamma_sum(a);
    let gamma = complex_route_gamma(a);
    let (sum, closed) = binomial_convolution(a);
    if radial != gamma || unsimplified != gamma || sum != closed {
        return Err(Error::RouteMismatch(format!(
            "complex integral at a=({a}): radial {radial}, gamma-sum {unsimplified}, gamma ratio {gamma}"
        )));
    }
    Ok(gamma)
}

/// Exact Dyson constant term divided by `4^{a1+a2+a3}`: the normalised real torus
/// integral at natural exponents.
pub fn real_torus_exact(a: NaturalTriple) -> BigRational {
    BigRational::new(dyson_ct_lhs(a), BigInt::from(4).pow(a.sum()))
}
