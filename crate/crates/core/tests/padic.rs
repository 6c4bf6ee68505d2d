use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tripint::padic::*;

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn f_oracle_agrees_with_closed_form_on_integer_exponents() {
    for p in [2, 3, 5] {
        for v in -2i64..=2 {
            let y = PAdicScalar::new(prime(p).pow(v) * q(1, 1));
            let exact = f_closed_exact(-5, 1, &y, prime(p)).unwrap().to_f64().unwrap();
            let re = |x: f64| Complex64::new(x, 0.0);
            let ctx = f_oracle_depths(re(-5.0), re(1.0), &y, prime(p), 1e-6).unwrap();
            let o = f_oracle(re(-5.0), re(1.0), &y, &ctx).unwrap();
            assert!(o.contains(re(exact), 0.0), "p={p} v={v}: {o:?} vs {exact}");
        }
    }
}

#[test]
fn uncorrected_formula_is_caught_by_the_oracle() {
    let y = PAdicScalar::from_ratio(1, 3).unwrap();
    let uncorrected = f_closed_uncorrected_exact(-4, 1, &y, prime(3)).unwrap().to_f64().unwrap();
    let ctx = PAdicContext::with_depths(prime(3), 6, 8).unwrap();
    let o = f_oracle(Complex64::new(-4.0, 0.0), Complex64::new(1.0, 0.0), &y, &ctx).unwrap();
    assert!(!o.contains(Complex64::new(uncorrected, 0.0), 0.0));
}

#[test]
fn j_closed_equals_exact_shell_sum() {
    // Shell sum of ψ^b F in exact arithmetic, truncated far enough out and in
    // that both tails are far below the comparison threshold.
    for p in [2u64, 3, 5] {
        let pp = prime(p);
        let (a, b, c) = (-4i64, -5i64, 1i64);
        let unit = BigRational::one() - pp.pow(-1);
        let mut total = f_closed_exact(a, c, &PAdicScalar::from_int(0), pp).unwrap() * pp.pow(-61);
        for k in -200..=60i64 {
            let y = PAdicScalar::new(pp.pow(k));
            let psi_b = if k < 0 { pp.pow(-b * k) } else { BigRational::one() };
            total += &unit * pp.pow(-k) * psi_b * f_closed_exact(a, c, &y, pp).unwrap();
        }
        let closed = j_closed_exact(a, b, c, pp).unwrap();
        let diff = ((total - &closed) / &closed).to_f64().unwrap().abs();
        assert!(diff < 1e-25, "p={p}: diff {diff:e}");
    }
}

#[test]
fn triple_integral_dictionary() {
    for p in [2, 3, 5, 7] {
        for s in [[2i64, 2, 2], [2, 3, 3], [3, 3, 4]] {
            let (reduced, full) = triple_closed_exact(s, prime(p)).unwrap();
            assert_eq!(reduced, triple_via_j_exact(s, prime(p)).unwrap());
            assert_eq!(full, &reduced * (BigRational::one() + prime(p).pow(-1)));
            assert_eq!(psi_moment_exact(-2, prime(p)).unwrap(), &full / &reduced);
        }
    }
}

#[test]
fn moebius_identities_hold_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for p in [2, 3, 5, 7] {
        let pp = prime(p);
        let mut n = 0;
        while n < 100 {
            let k = random_sl2_zp(&mut rng, pp);
            let g = random_sl2_qp(&mut rng, pp);
            let x = random_scalar(&mut rng, pp, -5, 5);
            let y = random_scalar(&mut rng, pp, -5, 5);
            if let (Some(a), Some(b)) = (psi_identity_holds(&k, &x, pp), difference_identity_holds(&g, &x, &y)) {
                assert!(a && b);
                n += 1;
            }
            // k(x) moves x to 0 and keeps ψ-norms under control.
            let kx = k_matrix(&x, pp);
            assert!(moebius_act(&kx, &x).unwrap().is_zero());
        }
    }
}
