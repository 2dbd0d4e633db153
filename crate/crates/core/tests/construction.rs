mod common;

use common::*;
use proptest::prelude::*;
use sl2prod::construction::{
    chebyshev, check_conditions, conjugation_record, inequality_probe, l_inv_squared, l_squared,
    lambda_sum, pell_divergence, InequalityParams, PROBED_INEQUALITIES,
};
use sl2prod::linalg::RingMat2;
use sl2prod::ring::{ratio, QuadRat, QuarticElem};

/// Shear parameter whose `σ₂` image has coefficients `(a, −m, p, −e)`,
/// `a, m, p, e ≥ 0`, so the shifted entries of `σ₂(A)` stay signed.
fn signed_param() -> impl Strategy<Value = QuarticElem> {
    prop::array::uniform4(0i64..=2)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| QuarticElem::from_ints([c[0], -c[1], c[2], -c[3]]))
}

fn signed_unimodular() -> impl Strategy<Value = RingMat2> {
    (signed_param(), signed_param(), signed_param()).prop_map(|(x, y, z)| {
        let (one, zero) = (QuarticElem::one(), QuarticElem::zero());
        let up = |t| RingMat2::new(one.clone(), t, zero.clone(), one.clone());
        let lo = |t| RingMat2::new(one.clone(), zero.clone(), t, one.clone());
        up(x).mat_mul(&lo(y)).mat_mul(&up(z))
    })
}

proptest! {
    #![proptest_config(cases(24))]

    #[test]
    fn conjugation_closed_forms_match(a in signed_unimodular()) {
        let mut r_terms = None;
        for n in 0..=8 {
            let rec = conjugation_record(&a, n).unwrap();
            prop_assert!(rec.closed_form_matches, "n = {n}");
            let q = q().mat_pow(n).unwrap();
            prop_assert_eq!(&rec.direct, &q.mat_mul(&a.sigma2()).mat_mul(&q.mat_inv().unwrap()));
            let d = rec.delta.expect("signed entries");
            prop_assert!(d.entries_match && d.decomposition_matches && d.difference_identity, "n = {n}");
            if n >= 1 {
                let r = (d.r1.clone(), d.r2.clone(), d.r1p.clone(), d.r2p.clone());
                match &r_terms {
                    None => r_terms = Some(r),
                    Some(prev) => prop_assert_eq!(prev, &r),
                }
            }
        }
    }
}

#[test]
fn conjugation_at_small_exponents() {
    let a = p();
    let r0 = conjugation_record(&a, 0).unwrap();
    assert_eq!(r0.direct, a.sigma2());
    assert_eq!(r0.a_n, QuadRat::from_ints(1, 0));
    assert_eq!(r0.b_n, QuadRat::from_ints(0, 0));
    let r1 = conjugation_record(&a, 1).unwrap();
    assert_eq!(r1.a_n, QuadRat::from_ints(3, 2));
}

#[test]
fn scalar_identities() {
    assert_eq!(lambda_sum(), QuadRat::from_ints(3, 2));
    assert_eq!(l_squared(), QuadRat::from_ints(13, 12));
    assert_eq!(
        l_inv_squared(),
        QuadRat::new(ratio(-13, 119), ratio(12, 119))
    );
    assert_eq!(&l_squared() * &l_inv_squared(), QuadRat::from_ints(1, 0));
}

#[test]
fn chebyshev_matches_powers_of_q() {
    assert_eq!(chebyshev(0).as_quad(), QuadRat::from_ints(2, 0));
    let mut qn = RingMat2::identity();
    for n in 1..=30 {
        qn = qn.mat_mul(&q());
        assert_eq!(
            Some(chebyshev(n).as_quad()),
            qn.trace().as_quad(),
            "n = {n}"
        );
    }
}

#[test]
fn pell_gap_stays_bounded() {
    let r = pell_divergence(30);
    assert!(r.gap_bounded_by_two);
    assert!(r.ratio_converges);
    assert_eq!(r.divergence_verdict, "refuted");
}

#[test]
fn commutator_conditions_hold_on_a_grid() {
    for m in 1..=5 {
        for n in 1..=5 {
            let c = check_conditions(&p(), &q(), m, n).unwrap();
            assert!(c.condition3(), "M = {m}, N = {n}");
            assert!(c.all_hold());
        }
    }
}

#[test]
fn inequality_probes_run_on_the_generators() {
    let params = InequalityParams::default();
    for a in [p(), q(), p().mat_mul(&q())] {
        for w in PROBED_INEQUALITIES {
            let r = inequality_probe(&a, w, &params).unwrap();
            assert_eq!(r.which, w);
            assert!(!r.checks.is_empty());
            let combined = if r.combine == "any" {
                r.checks.iter().any(|c| c.holds)
            } else {
                r.checks.iter().all(|c| c.holds)
            };
            assert_eq!(combined, r.holds);
        }
    }
    assert!(inequality_probe(&p(), 5, &params).is_err());
    assert!(inequality_probe(&RingMat2::from_ints(2, 0, 0, 1), 4, &params).is_err());
}
