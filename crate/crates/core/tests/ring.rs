mod common;

use common::*;
use num_traits::One;
use proptest::prelude::*;
use sl2prod::ring::{
    delta, delta1, delta2, field_quantity_n, galois, gamma, gamma1, gamma2, inequality1, Interval,
    QuarticElem, Rational, Sign,
};

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(cases(300))]

    #[test]
    fn multiplication_is_associative(x in quartic(20), y in quartic(20), z in quartic(20)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn distributes(x in quartic(20), y in quartic(20), z in quartic(20)) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn inverse_is_two_sided(x in nonzero_quartic(20)) {
        let inv = x.inv().unwrap();
        prop_assert!((&x * &inv).is_one());
        prop_assert!((&inv * &x).is_one());
    }

    #[test]
    fn text_form_round_trips(x in quartic(1000)) {
        let back: QuarticElem = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn sign_matches_float_value(x in quartic(50)) {
        let v = embed_f64(&x, 0).0;
        match x.sign() {
            Sign::Zero => prop_assert!(x.is_zero()),
            s => {
                prop_assert!(!x.is_zero());
                if v.abs() > 1e-6 {
                    prop_assert_eq!(s == Sign::Positive, v > 0.0);
                }
            }
        }
    }

    #[test]
    fn enclosure_contains_float_value(x in quartic(50)) {
        let iv = Interval::of_quartic(&x, 64);
        let v = embed_f64(&x, 0).0;
        let (lo, hi) = iv.to_f64_bounds();
        prop_assert!(lo - 1e-9 <= v && v <= hi + 1e-9);
        prop_assert!(iv.lo <= iv.hi);
    }

    #[test]
    fn embeddings_match_float_evaluation(x in quartic(30), k in 0usize..4) {
        let (re, im) = galois(&x, k).to_f64_pair();
        let (fre, fim) = embed_f64(&x, k);
        prop_assert!(close(re, fre) && close(im, fim), "σ_{k}({x}): ({re}, {im}) vs ({fre}, {fim})");
    }

    #[test]
    fn decomposition_identities(x in signed_quartic(40)) {
        prop_assert_eq!(&gamma(&x).unwrap() + &delta(&x).unwrap(), x.clone());
        let parts = &(&gamma1(&x).unwrap() + &delta1(&x).unwrap())
            + &(&gamma2(&x).unwrap() + &delta2(&x).unwrap());
        prop_assert_eq!(parts, x);
    }
}

proptest! {
    #![proptest_config(cases(1000))]

    #[test]
    fn galois_is_multiplicative(x in quartic(30), y in quartic(30), k in 0usize..4) {
        prop_assert_eq!(galois(&(&x * &y), k), &galois(&x, k) * &galois(&y, k));
        prop_assert_eq!(galois(&(&x + &y), k), &galois(&x, k) + &galois(&y, k));
    }

    #[test]
    fn norm_formula_matches_determinant(x in quartic(50)) {
        let n = field_quantity_n(&x).unwrap();
        prop_assert_eq!(&n, &norm_by_det(&x));
        if !x.is_zero() {
            prop_assert!(n >= Rational::one());
        }
    }
}

#[test]
fn sigma_one_and_three_are_conjugate() {
    let x = QuarticElem::from_ints([5, -3, 1, -2]);
    assert_eq!(galois(&x, 1).conj(), galois(&x, 3));
    assert!(galois(&x, 2).is_real());
}

/// `|Δ(xy)| ≤ |Δ(x)Δ(y)|` on signed inputs; any violation is printed in full.
#[test]
fn delta_product_inequality_survey() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let strat = (signed_quartic(6), signed_quartic(6));
    let mut violations = Vec::new();
    for _ in 0..500 {
        let (x, y) = strat.new_tree(&mut runner).unwrap().current();
        let r = inequality1(&x, &y).unwrap();
        if !r.holds {
            violations.push(r);
        }
    }
    for v in &violations {
        println!(
            "counterexample: x = {}, y = {}, |Δ(xy)| = {}, |Δ(x)Δ(y)| = {}",
            v.x, v.y, v.lhs, v.rhs
        );
    }
    assert!(
        violations.is_empty(),
        "{} of 500 signed pairs violate the bound",
        violations.len()
    );
}
