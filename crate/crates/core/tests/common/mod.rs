#![allow(dead_code)]

//! Strategies and independent oracles shared by the integration tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sl2prod::linalg::RingMat2;
use sl2prod::ring::QuarticElem;

pub const BETA: f64 = 1.189_207_115_002_721;

pub fn p() -> RingMat2 {
    "5 -3 1 -2; 1 0 0 0; -1 0 0 0; 0 0 0 0".parse().unwrap()
}

pub fn q() -> RingMat2 {
    "3 0 2 0; 1 0 0 0; -1 0 0 0; 0 0 0 0".parse().unwrap()
}

pub fn quartic(b: i64) -> impl Strategy<Value = QuarticElem> {
    prop::array::uniform4(-b..=b).prop_map(QuarticElem::from_ints)
}

pub fn nonzero_quartic(b: i64) -> impl Strategy<Value = QuarticElem> {
    quartic(b).prop_filter("nonzero", |x| !x.is_zero())
}

/// Nonzero element with all coefficients of one sign.
pub fn signed_quartic(b: i64) -> impl Strategy<Value = QuarticElem> {
    (prop::array::uniform4(0..=b), any::<bool>())
        .prop_filter("nonzero", |(c, _)| c.iter().any(|&x| x != 0))
        .prop_map(|(c, neg)| {
            let s = if neg { -1 } else { 1 };
            QuarticElem::from_ints(c.map(|x| s * x))
        })
}

fn shear(x: QuarticElem, upper: bool) -> RingMat2 {
    let (one, zero) = (QuarticElem::one(), QuarticElem::zero());
    if upper {
        RingMat2::new(one.clone(), x, zero, one)
    } else {
        RingMat2::new(one.clone(), zero, x, one)
    }
}

/// Products of three alternating shears, so determinant 1 by construction.
pub fn unimodular(b: i64) -> impl Strategy<Value = RingMat2> {
    (quartic(b), quartic(b), quartic(b)).prop_map(|(x, y, z)| {
        shear(x, true)
            .mat_mul(&shear(y, false))
            .mat_mul(&shear(z, true))
    })
}

/// Product of letters from `{P, P⁻¹, Q, Q⁻¹}` (indices 0..4).
pub fn word_matrix(letters: &[usize]) -> RingMat2 {
    let gens = [p(), p().mat_inv().unwrap(), q(), q().mat_inv().unwrap()];
    letters
        .iter()
        .fold(RingMat2::identity(), |acc, &i| acc.mat_mul(&gens[i]))
}

pub fn pq_word(max_len: usize) -> impl Strategy<Value = RingMat2> {
    prop::collection::vec(0usize..4, 1..=max_len).prop_map(|w| word_matrix(&w))
}

/// Floating-point value of `σ_k(x)` as `(re, im)`, summing
/// `c_j (β iᵏ)ʲ` directly.
pub fn embed_f64(x: &QuarticElem, k: usize) -> (f64, f64) {
    let c = x.coeffs().map(|r| rat_f64(&r));
    let (mut re, mut im) = (0.0, 0.0);
    // (β iᵏ)ʲ = βʲ i^{jk}
    for (j, cj) in c.iter().enumerate() {
        let mag = cj * BETA.powi(j as i32);
        match (j * k) % 4 {
            0 => re += mag,
            1 => im += mag,
            2 => re -= mag,
            _ => im -= mag,
        }
    }
    (re, im)
}

pub fn rat_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap();
    let d: f64 = r.denom().to_string().parse().unwrap();
    n / d
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::from_integer(BigInt::from(1));
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let pv = m[col][col].clone();
        d *= &pv;
        for r in col + 1..n {
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    d
}

/// Field norm of `x` as the determinant of multiplication by `x` on
/// `1, β, β², β³`.
pub fn signed_norm(x: &QuarticElem) -> BigRational {
    let c = x.coeffs();
    let two = BigRational::from_integer(BigInt::from(2));
    let m = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i >= j {
                        c[i - j].clone()
                    } else {
                        &two * &c[4 + i - j]
                    }
                })
                .collect()
        })
        .collect();
    det(m)
}

pub fn norm_by_det(x: &QuarticElem) -> BigRational {
    signed_norm(x).abs()
}

/// Proptest settings without on-disk failure persistence.
pub fn cases(n: u32) -> ProptestConfig {
    ProptestConfig {
        cases: n,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
