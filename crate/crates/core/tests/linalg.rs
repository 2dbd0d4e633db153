mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use sl2prod::linalg::{classify, regular_rep, RingMat2};
use sl2prod::projective::{hyperbolic_like, SpectralSource};
use sl2prod::ring::{galois, QuarticElem};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `det(t·I − Ψ(A))` by elimination.
fn psi_charpoly_at(a: &RingMat2, t: i64) -> BigRational {
    let psi = regular_rep(a, 4).unwrap().m;
    let m = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let d = if i == j { int(t) } else { int(0) };
                    d - psi.get(i, j)
                })
                .collect()
        })
        .collect();
    det(m)
}

proptest! {
    #![proptest_config(cases(200))]

    #[test]
    fn psi_of_words_has_determinant_one(a in pq_word(6)) {
        prop_assert_eq!(regular_rep(&a, 4).unwrap().m.det(), int(1));
    }

    #[test]
    fn psi_is_multiplicative(a in pq_word(6), b in pq_word(6)) {
        let lhs = regular_rep(&a.mat_mul(&b), 4).unwrap().m;
        let rhs = regular_rep(&a, 4).unwrap().m.mul(&regular_rep(&b, 4).unwrap().m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_is_multiplicative_on_shears(a in unimodular(3), b in unimodular(3)) {
        let lhs = regular_rep(&a.mat_mul(&b), 4).unwrap().m;
        let rhs = regular_rep(&a, 4).unwrap().m.mul(&regular_rep(&b, 4).unwrap().m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_text_round_trip(a in unimodular(4)) {
        prop_assert!(a.mat_mul(&a.mat_inv().unwrap()).is_identity());
        let back: RingMat2 = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(RingMat2::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn classification_is_conjugation_invariant(w in pq_word(4), k in 0usize..4) {
        for a in [p(), q()] {
            let c = w.mat_mul(&a).mat_mul(&w.mat_inv().unwrap());
            prop_assert_eq!(classify(&c, k).unwrap().class, classify(&a, k).unwrap().class);
        }
    }

    #[test]
    fn trace_commutes_with_embedding(a in unimodular(3), k in 0usize..4) {
        prop_assert_eq!(galois(&a.trace(), k), a.embed(k).unwrap().trace());
    }
}

proptest! {
    #![proptest_config(cases(50))]

    /// The characteristic polynomial of `Ψ(A)` at `t` is the norm of
    /// `t² − tr(A)·t + 1`, which is the product of the four embedded
    /// characteristic polynomials.
    #[test]
    fn psi_spectrum_is_union_of_embedded_spectra(a in unimodular(2), t in -3i64..=3) {
        let tr = a.trace();
        let poly = &QuarticElem::from_int(t * t + 1) - &tr.scale_int(t);
        prop_assert_eq!(psi_charpoly_at(&a, t), signed_norm(&poly));
    }
}

#[test]
fn phi2_matches_displayed_shape() {
    // Q over Z[√2]: blocks [[3, 4], [2, 3]], [[1, 0], [0, 1]], [[-1, 0], [0, -1]], 0
    let rows = regular_rep(&q(), 2).unwrap().m.rows_as_strings();
    assert_eq!(rows[0], ["3", "4", "1", "0"]);
    assert_eq!(rows[1], ["2", "3", "0", "1"]);
    assert_eq!(rows[2], ["-1", "0", "0", "0"]);
    assert_eq!(rows[3], ["0", "-1", "0", "0"]);
}

#[test]
fn rejects_out_of_subring_inputs() {
    assert!(regular_rep(&p(), 2).is_err());
    assert!(regular_rep(&p(), 5).is_err());
    assert!(classify(&RingMat2::from_ints(2, 0, 0, 1), 0).is_err());
}

#[test]
fn attracting_data_is_stable_under_powers() {
    let src = |m: RingMat2| hyperbolic_like(&SpectralSource::Psi(m)).unwrap().unwrap();
    let base = src(p());
    assert!(base.cross_relations_hold());
    for n in [2, 3] {
        let d = src(p().pow_u(n));
        assert!(d.attracting.same_point(&base.attracting).unwrap());
        assert!(d.repelling.same_point(&base.repelling).unwrap());
    }
    let inv = src(p().mat_inv().unwrap());
    assert!(inv.attracting.same_point(&base.repelling).unwrap());
    assert!(inv.repelling.same_point(&base.attracting).unwrap());
    assert!(hyperbolic_like(&SpectralSource::Psi(q()))
        .unwrap()
        .is_none());
}
