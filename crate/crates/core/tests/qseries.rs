use num_complex::Complex64;
use tripint::algebra::QPolynomial;
use tripint::qseries::*;

#[test]
fn q_binomial_is_symmetric_and_specialises() {
    for a in 0..8 {
        for b in 0..=a {
            let x = q_binomial(a, b).unwrap();
            assert_eq!(x, q_binomial(a, a - b).unwrap());
            assert_eq!(x.eval_at_one(), tripint::algebra::binomial(a, b));
        }
    }
}

#[test]
fn kadell_expansion_matches_product() {
    for a in 0..5 {
        for b in 0..5 {
            assert_eq!(kadell_expansion(a, b).unwrap(), kadell_direct_product(a, b));
        }
    }
}

#[test]
fn numeric_pochhammer_and_q_gamma_agree_with_polynomials() {
    let ctx = QContext::new(0.6).unwrap();
    for n in 0..6u32 {
        let qf: QPolynomial = q_factorial(n);
        let g = q_gamma(Complex64::new(n as f64 + 1.0, 0.0), &ctx).unwrap();
        assert!((g.re - qf.eval_f64(0.6)).abs() < 1e-12 * g.re);
    }
    let x = Complex64::from_polar(1.0, 0.7);
    let direct: Complex64 = (0..3).map(|i| 1.0 - x * 0.6f64.powi(i)).product();
    let v = pochhammer_numeric(x, Complex64::new(3.0, 0.0), &ctx).unwrap();
    assert!((v - direct).norm() < 1e-13);
}

#[test]
fn q_gamma_tends_to_gamma() {
    let target = tripint::numeric::gamma_real(2.5).unwrap();
    let mut last = f64::INFINITY;
    for q in [0.9, 0.99, 0.999] {
        let g = q_gamma(Complex64::new(2.5, 0.0), &QContext::new(q).unwrap()).unwrap();
        let err = (g.re - target).abs();
        assert!(err < last);
        last = err;
    }
    assert!(last < 1e-3);
}
