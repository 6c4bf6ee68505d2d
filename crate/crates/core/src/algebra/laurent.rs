use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::qpoly::QPolynomial;

/// Exponent vector `(e1, e2, e3)` of a monomial `y1^e1 y2^e2 y3^e3`.
pub type Exponent = [i32; 3];

/// Sparse Laurent polynomial in three variables with `Z[q]` coefficients.
///
/// Terms are kept in a `BTreeMap` so iteration order (and therefore every
/// rendering) is deterministic. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Exponent, QPolynomial>,
}

fn add_exponents(a: &Exponent, b: &Exponent) -> Exponent {
    let mut out = [0i32; 3];
    for k in 0..3 {
        out[k] = a[k].checked_add(b[k]).expect("Laurent exponent overflow");
    }
    out
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0], QPolynomial::one())
    }

    pub fn monomial(exp: Exponent, coeff: QPolynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from possibly repeated exponents; coefficients of equal
    /// exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, QPolynomial)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, exp: Exponent, coeff: &QPolynomial) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// `sum_k c_k * m^k` where `m` is the monomial with exponent `step`; used to
    /// substitute a ratio such as `y1/y2` into a polynomial in one formal variable.
    pub fn substitute(coeffs: &[QPolynomial], step: Exponent) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| {
            let k = k as i32;
            ([step[0] * k, step[1] * k, step[2] * k], c.clone())
        }))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &Exponent) -> QPolynomial {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Constant term: the coefficient at exponent `(0, 0, 0)`.
    pub fn constant_term(&self) -> QPolynomial {
        self.coefficient(&[0, 0, 0])
    }

    /// True when every exponent vector sums to zero, i.e. the polynomial is a
    /// function of the ratios `y_i / y_j` only.
    pub fn is_degree_zero(&self) -> bool {
        self.terms.keys().all(|e| e.iter().map(|&x| x as i64).sum::<i64>() == 0)
    }

    pub fn scale(&self, c: &QPolynomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Constant term of `∏ factors`, where every factor is degree-0 homogeneous.
    ///
    /// Homogeneity lets the expansion run with `y3 = 1`: the product is
    /// accumulated on `(e1, e2)` only and the constant term is read off at
    /// `(0, 0)`. Panics if a factor is not homogeneous of degree zero.
    pub fn constant_term_of_product(factors: &[LaurentPolynomial]) -> QPolynomial {
        let mut acc: HashMap<[i32; 2], QPolynomial> = HashMap::new();
        acc.insert([0, 0], QPolynomial::one());
        for f in factors {
            assert!(f.is_degree_zero(), "constant_term_of_product: factor is not degree-0 homogeneous");
            let mut next: HashMap<[i32; 2], QPolynomial> = HashMap::with_capacity(acc.len() * 2);
            for (ea, ca) in &acc {
                for (eb, cb) in &f.terms {
                    let key = [
                        ea[0].checked_add(eb[0]).expect("Laurent exponent overflow"),
                        ea[1].checked_add(eb[1]).expect("Laurent exponent overflow"),
                    ];
                    *next.entry(key).or_default() += &(ca * cb);
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        acc.remove(&[0, 0]).unwrap_or_default()
    }
}

impl Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut acc: HashMap<Exponent, QPolynomial> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *acc.entry(add_exponents(ea, eb)).or_default() += &(ca * cb);
            }
        }
        LaurentPolynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*y^{e:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn c(v: i64) -> QPolynomial {
        QPolynomial::constant(v)
    }

    /// `y1/y2 - 1`
    fn ratio_minus_one(i: usize, j: usize) -> LaurentPolynomial {
        let mut e = [0; 3];
        e[i] = 1;
        e[j] = -1;
        LaurentPolynomial::from_terms([(e, c(1)), ([0, 0, 0], c(-1))])
    }

    #[test]
    fn identity_element() {
        let g = LaurentPolynomial::from_terms([([1, -1, 0], c(3)), ([0, 2, -2], QPolynomial::from_i64s(&[0, 1]))]);
        assert_eq!(&LaurentPolynomial::one() * &g, g);
    }

    #[test]
    fn two_term_expansion() {
        let prod = &ratio_minus_one(0, 1) * &ratio_minus_one(1, 0);
        let expected = LaurentPolynomial::from_terms([([0, 0, 0], c(2)), ([1, -1, 0], c(-1)), ([-1, 1, 0], c(-1))]);
        assert_eq!(prod, expected);
        assert_eq!(prod.constant_term(), c(2));
        assert_eq!(LaurentPolynomial::constant_term_of_product(&[ratio_minus_one(0, 1), ratio_minus_one(1, 0)]), c(2));
    }

    #[test]
    fn constant_term_of_shifted_constant() {
        let f = LaurentPolynomial::from_terms([([0, 0, 0], c(7)), ([1, -1, 0], c(1))]);
        assert_eq!(f.constant_term(), c(7));
        assert!(LaurentPolynomial::zero().constant_term().is_zero());
    }

    #[test]
    fn six_factor_dyson_product_is_homogeneous() {
        let mut prod = LaurentPolynomial::one();
        for (i, j) in [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
            prod = &prod * &ratio_minus_one(i, j);
        }
        assert!(prod.is_degree_zero());
        // (y_i/y_j - 1)(y_j/y_i - 1) = (1 - y_i/y_j)(1 - y_j/y_i), so the CT is Dyson's 3!/1 = 6.
        assert_eq!(prod.constant_term(), c(6));
    }

    #[test]
    #[should_panic(expected = "degree-0")]
    fn reduced_product_rejects_inhomogeneous_factor() {
        let f = LaurentPolynomial::monomial([1, 0, 0], c(1));
        LaurentPolynomial::constant_term_of_product(&[f]);
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec(((-2i32..3, -2i32..3), prop::collection::vec(-3i64..4, 0..3)), 0..5).prop_map(|terms| {
            LaurentPolynomial::from_terms(
                terms.into_iter().map(|((a, b), coeffs)| ([a, b, -a - b], QPolynomial::from_i64s(&coeffs))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(f in arb_laurent(), g in arb_laurent(), h in arb_laurent()) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert!((&f * &g).term_count() <= f.term_count() * g.term_count());
        }

        #[test]
        fn constant_term_is_linear(f in arb_laurent(), g in arb_laurent(), a in -5i64..5, b in -5i64..5) {
            let combo = &f.scale(&c(a)) + &g.scale(&c(b));
            let expected = &f.constant_term().scale(&BigInt::from(a)) + &g.constant_term().scale(&BigInt::from(b));
            prop_assert_eq!(combo.constant_term(), expected);
        }

        #[test]
        fn reduced_expansion_matches_full(f in arb_laurent(), g in arb_laurent(), h in arb_laurent()) {
            let full = &(&f * &g) * &h;
            prop_assert!(full.is_degree_zero());
            prop_assert_eq!(
                LaurentPolynomial::constant_term_of_product(&[f, g, h]),
                full.constant_term()
            );
        }
    }
}
