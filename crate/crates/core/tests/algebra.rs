use num_bigint::BigInt;
use tripint::algebra::*;

#[test]
fn q_polynomial_division_round_trip() {
    let a = QPolynomial::from_i64s(&[1, 2, 2, 1]);
    let b = QPolynomial::from_i64s(&[1, 1]);
    let prod = &a * &b;
    assert_eq!(prod.div_exact(&b).unwrap(), a);
    assert!(QPolynomial::from_i64s(&[1, 0, 1]).div_exact(&b).is_err());
    assert_eq!(a.to_string(), "1 + 2*q + 2*q^2 + 1*q^3");
}

#[test]
fn constant_term_of_dyson_product_matches_full_expansion() {
    let one_minus = |i: usize, j: usize, n: u32| {
        let mut e = [0; 3];
        e[i] = 1;
        e[j] = -1;
        let f = LaurentPolynomial::from_terms([([0, 0, 0], QPolynomial::one()), (e, QPolynomial::constant(-1))]);
        f.pow(n)
    };
    let factors = vec![
        one_minus(0, 1, 2),
        one_minus(1, 0, 2),
        one_minus(0, 2, 2),
        one_minus(2, 0, 1),
        one_minus(1, 2, 2),
        one_minus(2, 1, 1),
    ];
    let full = factors.iter().fold(LaurentPolynomial::one(), |acc, f| &acc * f);
    let reduced = LaurentPolynomial::constant_term_of_product(&factors);
    assert_eq!(full.constant_term(), reduced);
    // a = (2,2,1): 5!/(2!2!1!) = 30
    assert_eq!(reduced, QPolynomial::constant(30));
}

#[test]
fn factorial_ratios() {
    assert_eq!(factorial_ratio(&[6], &[3, 3]).unwrap(), BigInt::from(20));
    assert!(factorial_ratio(&[3], &[2, 2]).is_err());
    assert_eq!(binomial(10, 3), BigInt::from(120));
    assert_eq!(binomial(3, 5), BigInt::from(0));
}
