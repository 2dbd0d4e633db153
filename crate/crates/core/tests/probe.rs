mod common;

use common::*;
use proptest::prelude::*;
use sl2prod::linalg::RingMat2;
use sl2prod::probe::{
    dual_smallness_scan, enumerate_words, evaluate_word, margin_profile, torsion_probe,
    trivial_words, word_count, GeneratorSet, Letter, ReducedWord, TorsionResult, WordFamily,
    LETTERS,
};
use sl2prod::projective::{check_certificate, free_pair_power, PingPongCertificate};
use sl2prod::ring::{ratio, QuarticElem};
use std::sync::OnceLock;

fn certified() -> &'static PingPongCertificate {
    static CERT: OnceLock<PingPongCertificate> = OnceLock::new();
    CERT.get_or_init(|| free_pair_power(&p(), &q()).unwrap())
}

fn word(max: usize) -> impl Strategy<Value = ReducedWord> {
    prop::collection::vec(0usize..4, 0..=max).prop_map(|v| {
        let letters: Vec<Letter> = v.into_iter().map(|i| LETTERS[i]).collect();
        ReducedWord::reduce(&letters)
    })
}

proptest! {
    #![proptest_config(cases(500))]

    #[test]
    fn evaluation_is_a_homomorphism(a in word(6), b in word(6)) {
        let n = 1;
        let ab = evaluate_word(&a.concat(&b), n).unwrap();
        let direct = evaluate_word(&a, n).unwrap().mat_mul(&evaluate_word(&b, n).unwrap());
        prop_assert_eq!(ab, direct);
    }

    #[test]
    fn inverse_word_evaluates_to_inverse(a in word(6)) {
        let m = evaluate_word(&a, 2).unwrap();
        prop_assert!(m.mat_mul(&evaluate_word(&a.inverse(), 2).unwrap()).is_identity());
    }

    #[test]
    fn word_text_round_trips(a in word(10)) {
        prop_assert_eq!(ReducedWord::parse(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn enumeration_counts_reduced_words() {
    for l in 0..6 {
        let words: Vec<_> = enumerate_words(l).collect();
        assert_eq!(words.len() as u64, word_count(l));
        assert!(words[0].is_empty());
        assert!(words.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert!(words.iter().all(|w| w.len() as u32 <= l));
    }
    assert_eq!(word_count(1), 1 + 4);
    assert_eq!(word_count(2), 1 + 4 + 12);
}

#[test]
fn certificate_survives_a_json_round_trip() {
    let cert = certified();
    let back = PingPongCertificate::from_json(&cert.to_json()).unwrap();
    assert!(check_certificate(&back).unwrap().iter().all(|c| c.holds));
}

#[test]
fn tampered_certificates_are_rejected() {
    let mut wrong_n = certified().clone();
    wrong_n.n = 1;
    assert!(!check_certificate(&wrong_n).unwrap().iter().all(|c| c.holds));

    let mut big_radius = certified().clone();
    for b in &mut big_radius.balls {
        b.radius = "1/2".into();
    }
    let bad = check_certificate(&big_radius).map(|c| c.iter().all(|c| c.holds));
    assert!(!matches!(bad, Ok(true)));
}

/// No nonempty reduced word of length `≤ 10` in the `σ₂` views of the
/// certified pair is the identity.
#[test]
fn certified_pair_has_no_short_relations() {
    let n = certified().n;
    let gens = GeneratorSet::new(&p().sigma2().pow_u(n), &q().sigma2().pow_u(n)).unwrap();
    let (found, count) = trivial_words(&gens, 10);
    assert!(found.is_empty(), "relations {found:?}");
    assert_eq!(count, word_count(10) - 1);
}

#[test]
fn margin_is_positive_and_nonincreasing() {
    let n = certified().n;
    let profile = margin_profile(&WordFamily::gamma(n).unwrap(), 6, 12, &ratio(1, 100)).unwrap();
    assert_eq!(profile.len(), 6);
    for w in profile.windows(2) {
        assert!(w[1].margin_sq.cmp_exact(&w[0].margin_sq).is_le());
    }
    for r in &profile {
        assert!(r.margin.lo > ratio(0, 1));
        assert!(r.ties.contains(&r.witness.inverse()));
        assert!(r.escape_holds());
    }
}

/// At length 1 the margin is the smallest generator distance.
#[test]
fn margin_at_length_one_is_a_generator_minimum() {
    use sl2prod::probe::sq_dist_to_identity;
    let n = certified().n;
    let fam = WordFamily::gamma(n).unwrap();
    let r = &margin_profile(&fam, 1, 12, &ratio(1, 100)).unwrap()[0];
    let best = LETTERS
        .iter()
        .map(|&x| {
            let m = fam.gens.evaluate(&ReducedWord::new(vec![x]).unwrap());
            let (a, b) = (sq_dist_to_identity(&m, 0), sq_dist_to_identity(&m, 1));
            if a.cmp_exact(&b).is_ge() {
                a
            } else {
                b
            }
        })
        .min_by(|a, b| a.cmp_exact(b))
        .unwrap();
    assert_eq!(r.margin_sq, best);
}

#[test]
fn dual_rows_respect_the_norm_bound() {
    let fam = WordFamily::gamma(1).unwrap();
    let t = dual_smallness_scan(&fam, 6, &ratio(1, 2)).unwrap();
    assert!(t.all_hold);
    assert!(t.rows.iter().all(|r| r.holds));
}

#[test]
fn torsion_of_rotations() {
    // traces 0, 1, -1, √2 give orders 4, 6, 3, 8 modulo ±I: 2, 3, 3, 4
    let cases = [
        (RingMat2::from_ints(0, -1, 1, 0), 2, 4),
        (RingMat2::from_ints(1, -1, 1, 0), 3, 6),
        (RingMat2::from_ints(-1, -1, 1, 0), 3, 3),
    ];
    for (m, modc, abs) in cases {
        let r = torsion_probe(&m, 0, 100).unwrap();
        assert_eq!(
            r.result,
            TorsionResult::TorsionOfOrder {
                order_mod_center: modc,
                absolute_order: abs
            },
            "{m:?}"
        );
    }
    let s2 = QuarticElem::from_ints([0, 0, 1, 0]);
    let (one, zero) = (QuarticElem::one(), QuarticElem::zero());
    let rot8 = RingMat2::new(s2.clone(), -&one, one.clone(), zero);
    let r = torsion_probe(&rot8, 0, 100).unwrap();
    assert_eq!(
        r.result,
        TorsionResult::TorsionOfOrder {
            order_mod_center: 4,
            absolute_order: 8
        }
    );
    assert_eq!(
        torsion_probe(&p(), 0, 2000).unwrap().result,
        TorsionResult::NonTorsionUpTo { n_max: 2000 }
    );
}

#[test]
fn walks_do_not_depend_on_thread_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let fam = WordFamily::gamma(certified().n).unwrap();
            serde_json::to_string(&margin_profile(&fam, 5, 12, &ratio(1, 100)).unwrap()).unwrap()
        })
    };
    assert_eq!(run(1), run(4));
}
