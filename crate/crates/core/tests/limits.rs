mod common;

use common::*;
use proptest::prelude::*;
use sl2prod::limits::{
    check_limit_conditions, margin_uniformity_probe, paper_q, search_limit_candidates,
    LimitCandidate, LimitTargets,
};
use sl2prod::ring::{galois, ratio};

proptest! {
    #![proptest_config(cases(100))]

    #[test]
    fn views_are_the_embeddings(a in unimodular(2)) {
        let c = LimitCandidate::new(a.clone()).unwrap();
        prop_assert_eq!(c.r1(), a.sigma2());
        prop_assert_eq!(c.r3(), a.clone());
        let back = LimitCandidate::from_json(&c.to_json().coefficients).unwrap();
        prop_assert_eq!(&back, &c);
        for (x, y) in c.r1().entries().iter().zip(a.entries()) {
            prop_assert_eq!(galois(y, 2).re, (*x).clone());
        }
    }
}

#[test]
fn constant_sequence_fails_the_hyperbolicity_conditions() {
    let targets = LimitTargets::default_targets();
    let r =
        check_limit_conditions(&LimitCandidate::new(p()).unwrap(), &targets, &paper_q()).unwrap();
    assert!(!r.holds("iv"));
    let failing: Vec<_> = r
        .failing()
        .iter()
        .map(|c| (c.id, c.name.as_str()))
        .collect();
    assert_eq!(
        failing,
        [
            ("iv", "R_n^(1) = sigma_2(P_n) elliptic"),
            ("iv", "R_n^(3) = sigma_0(P_n) hyperbolic")
        ]
    );
}

#[test]
fn search_is_deterministic_across_thread_counts() {
    let targets = LimitTargets::default_targets();
    let q = paper_q();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| search_limit_candidates(2, &targets, &q, 8).unwrap())
    };
    let one = run(1);
    assert!(!one.is_empty());
    assert_eq!(one, run(3));
    for c in &one {
        let r = check_limit_conditions(c, &targets, &q).unwrap();
        assert!(r.holds("iv") && r.holds("viii"), "{:?}", c.p_n);
    }
}

#[test]
fn uniformity_probe_reports_positive_margins() {
    let targets = LimitTargets::default_targets();
    let q = paper_q();
    let found = search_limit_candidates(1, &targets, &q, 2).unwrap();
    let rows = margin_uniformity_probe(&found, &q, 1, 3, &ratio(1, 100)).unwrap();
    assert_eq!(rows.len(), found.len());
    for r in &rows {
        assert!(r.margin.margin.lo > ratio(0, 1));
    }
}
