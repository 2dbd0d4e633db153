//! Seeded random inputs for the sampled checks in `verify-paper`.

use crate::linalg::{CubicMat2, RingMat2};
use crate::ring::{CubicElem, QuarticElem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn quartic(r: &mut ChaCha8Rng, b: i64) -> QuarticElem {
    QuarticElem::from_ints(std::array::from_fn(|_| r.gen_range(-b..=b)))
}

/// `[[1, x], [0, 1]]·[[1, 0], [y, 1]]·[[1, z], [0, 1]]`; `even` keeps the
/// entries in `Z[√2]`.
pub fn unimodular(r: &mut ChaCha8Rng, b: i64, even: bool) -> RingMat2 {
    let mut e = || {
        let mut c: [i64; 4] = std::array::from_fn(|_| r.gen_range(-b..=b));
        if even {
            c[1] = 0;
            c[3] = 0;
        }
        QuarticElem::from_ints(c)
    };
    let (one, zero) = (QuarticElem::one(), QuarticElem::zero());
    let up = |x| RingMat2::new(one.clone(), x, zero.clone(), one.clone());
    let lo = |x| RingMat2::new(one.clone(), zero.clone(), x, one.clone());
    up(e()).mat_mul(&lo(e())).mat_mul(&up(e()))
}

/// Shear product whose `σ₂`-shifted entries are all signed: every
/// parameter has `σ₂` image with coefficients `(a, −m, p, −e)`, `a, m, p, e ≥ 0`.
pub fn signed_unimodular(r: &mut ChaCha8Rng) -> RingMat2 {
    let mut e = || {
        let c: [i64; 4] = std::array::from_fn(|_| r.gen_range(0..=2));
        let c = if c.iter().all(|&x| x == 0) {
            [1, 0, 0, 0]
        } else {
            c
        };
        QuarticElem::from_ints([c[0], -c[1], c[2], -c[3]])
    };
    let (one, zero) = (QuarticElem::one(), QuarticElem::zero());
    let up = |x| RingMat2::new(one.clone(), x, zero.clone(), one.clone());
    let lo = |x| RingMat2::new(one.clone(), zero.clone(), x, one.clone());
    up(e()).mat_mul(&lo(e())).mat_mul(&up(e()))
}

pub fn cubic_unimodular(r: &mut ChaCha8Rng, b: i64) -> CubicMat2 {
    let mut e = || CubicElem::from_ints(std::array::from_fn(|_| r.gen_range(-b..=b)));
    let (one, zero) = (CubicElem::one(), CubicElem::zero());
    let up = |x| CubicMat2 {
        e: [one.clone(), x, zero.clone(), one.clone()],
    };
    let lo = |x| CubicMat2 {
        e: [one.clone(), zero.clone(), x, one.clone()],
    };
    up(e()).mat_mul(&lo(e())).mat_mul(&up(e()))
}

/// Random product of at most `len` letters from `{P, P⁻¹, Q, Q⁻¹}`.
pub fn word_in(r: &mut ChaCha8Rng, gens: &[RingMat2; 4], len: usize) -> RingMat2 {
    let n = r.gen_range(1..=len);
    (0..n).fold(RingMat2::identity(), |acc, _| {
        acc.mat_mul(&gens[r.gen_range(0..4)])
    })
}
