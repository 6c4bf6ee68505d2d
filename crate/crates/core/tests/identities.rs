use num_bigint::BigInt;
use tripint::algebra::QPolynomial;
use tripint::identities::*;

#[test]
fn morris_holds_for_identity_and_outer_transposition() {
    let outer = Permutation3::new([2, 1, 0]).unwrap();
    for a in NaturalTriple::all_up_to(2) {
        for s in [Permutation3::identity(), outer] {
            assert_eq!(morris_ct_lhs(a, s), morris_rhs(a, s).unwrap(), "a=({a}) sigma={s}");
        }
    }
}

#[test]
fn morris_as_stated_fails_for_other_permutations() {
    // Even at q = 1 the two sides differ here, so no q-convention can repair it.
    let a = NaturalTriple::new(0, 1, 1);
    let s = Permutation3::new([1, 0, 2]).unwrap();
    let lhs = morris_ct_lhs(a, s);
    assert_eq!(lhs, QPolynomial::from_i64s(&[1, 1, -1]));
    assert_eq!(lhs.eval_at_one(), BigInt::from(1));
    assert_eq!(morris_rhs(a, s).unwrap().eval_at_one(), BigInt::from(2));
}

#[test]
fn q_dyson_specialises_to_dyson() {
    for a in NaturalTriple::all_up_to(3) {
        let q = morris_ct_lhs(a, Permutation3::identity());
        assert_eq!(q.eval_at_one(), dyson_ct_lhs(a), "a=({a})");
    }
}

#[test]
fn dyson_and_q_dyson_are_symmetric() {
    for a in NaturalTriple::all_up_to(3) {
        let d = dyson_ct_lhs(a);
        let m = morris_ct_lhs(a, Permutation3::identity());
        for s in Permutation3::all() {
            let b = a.permuted(&s);
            assert_eq!(dyson_ct_lhs(b), d);
            assert_eq!(morris_ct_lhs(b, Permutation3::identity()), m);
        }
    }
}

#[test]
fn q_dixon_forms_agree_and_specialise() {
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                let (l1, r1) = q_dixon_v1(a, b, c).unwrap();
                let (l2, r2) = q_dixon_v2(a, b, c).unwrap();
                assert_eq!(l1, r1);
                assert_eq!(l2, r2);
                assert_eq!(l1.eval_at_one(), dixon_lhs(a, b, c));
                assert_eq!(l2.eval_at_one(), dyson_via_dixon_sum(NaturalTriple::new(a, b, c)));
            }
        }
    }
}

#[test]
fn dixon_is_symmetric() {
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                let v = dixon_lhs(a, b, c);
                assert_eq!(v, dixon_lhs(b, c, a));
                assert_eq!(v, dixon_lhs(c, a, b));
                assert_eq!(v, dixon_rhs(a, b, c));
            }
        }
    }
}

#[test]
fn complex_routes_agree_on_small_grid() {
    for a in NaturalTriple::all_up_to(3) {
        let v = complex_exact_eval(a).unwrap();
        assert!(v > num_rational::BigRational::from(BigInt::from(0)));
    }
}

#[test]
fn ct_derivation_reproduces_q_dyson() {
    for a in NaturalTriple::all_up_to(2) {
        assert!(ct_derivation_check(a).unwrap(), "a=({a})");
        assert_ne!(ct_derivation(a).unwrap(), QPolynomial::zero());
    }
}
