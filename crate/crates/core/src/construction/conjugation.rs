//! `Qⁿ σ₂(A) Q⁻ⁿ` through `Qⁿ = [[aₙ, bₙ], [cₙ, dₙ]]`, with `aₙ = s_{n+1}`,
//! `bₙ = sₙ`, `cₙ = −sₙ`, `dₙ = −s_{n−1}` and `s_k = (λᵏ − λ⁻ᵏ)/L`.

use super::generators::paper_generators;
use crate::error::Result;
use crate::linalg::RingMat2;
use crate::ring::{delta, QuadRat, QuarticElem};

/// `λ + λ⁻¹ = 3 + 2√2`.
pub fn lambda_sum() -> QuadRat {
    QuadRat::from_ints(3, 2)
}

/// `L² = (λ + λ⁻¹)² − 4 = 13 + 12√2`.
pub fn l_squared() -> QuadRat {
    let t = lambda_sum();
    &(&t * &t) - &QuadRat::from_ints(4, 0)
}

pub fn l_inv_squared() -> QuadRat {
    l_squared().inv().expect("L² ≠ 0")
}

/// Runs `x_{k+1} = τx_k − x_{k−1}` from `(x₀, x₁)` to index `|n|`.
fn recurrence(x0: QuadRat, x1: QuadRat, n: u64) -> QuadRat {
    let tau = lambda_sum();
    let (mut a, mut b) = (x0, x1);
    for _ in 0..n {
        let next = &(&tau * &b) - &a;
        a = b;
        b = next;
    }
    a
}

/// `s_k = (λᵏ − λ⁻ᵏ)/L`, odd in `k`.
fn s(k: i64) -> QuadRat {
    let v = recurrence(QuadRat::zero(), QuadRat::one(), k.unsigned_abs());
    if k < 0 {
        -&v
    } else {
        v
    }
}

/// `T_k = λᵏ + λ⁻ᵏ`, even in `k`.
pub fn lucas_t(k: i64) -> QuadRat {
    recurrence(QuadRat::from_ints(2, 0), lambda_sum(), k.unsigned_abs())
}

/// `(aₙ, bₙ, cₙ, dₙ)` for any integer `n`.
pub fn q_power_entries(n: i64) -> [QuadRat; 4] {
    let b = s(n);
    [s(n + 1), b.clone(), -&b, -&s(n - 1)]
}

/// The Δ-level quantities of the conjugation identities, with
/// `X = Δ(ζ−1), Y = Δ(η), Z = Δ(μ), W = Δ(ν−1)`.
#[derive(Debug, Clone)]
pub struct DeltaTerms {
    pub x: QuarticElem,
    pub y: QuarticElem,
    pub z: QuarticElem,
    pub w: QuarticElem,
    pub s1: QuarticElem,
    pub s2: QuarticElem,
    pub r1: QuarticElem,
    pub r2: QuarticElem,
    pub s1p: QuarticElem,
    pub s2p: QuarticElem,
    pub r1p: QuarticElem,
    pub r2p: QuarticElem,
    /// `L²Ent_ij = L² + S + R` (diagonal) and the off-diagonal `L²Ent`
    /// expansions, for the conjugate and for `Q⁻ⁿσ₂(A)⁻¹Qⁿ`.
    pub entries_match: bool,
    /// `γ(·) + Δ(·)` of the conjugate reproduces it exactly.
    pub decomposition_matches: bool,
    /// `S₁ − S₁′ = T_{2n}[τ(Y − Z) + 2(W − X)]`.
    pub difference_identity: bool,
}

#[derive(Debug, Clone)]
pub struct ConjugationRecord {
    pub n: i64,
    pub a_n: QuadRat,
    pub b_n: QuadRat,
    pub c_n: QuadRat,
    pub d_n: QuadRat,
    /// `Qⁿ σ₂(A) Q⁻ⁿ`.
    pub direct: RingMat2,
    /// `Q⁻ⁿ σ₂(A)⁻¹ Qⁿ`.
    pub inverse_direct: RingMat2,
    /// The entry formulas in `aₙ, …, dₙ, ζ, η, μ, ν` equal `direct`, and
    /// `Qⁿ` itself equals `[[aₙ, bₙ], [cₙ, dₙ]]`.
    pub closed_form_matches: bool,
    /// `None` when some entry among `ζ−1, η, μ, ν−1` is unsigned.
    pub delta: Option<DeltaTerms>,
}

/// Δ with the convention `Δ(0) = 0`.
fn delta0(x: &QuarticElem) -> Result<QuarticElem> {
    if x.is_zero() {
        Ok(QuarticElem::zero())
    } else {
        delta(x)
    }
}

fn q4(x: &QuadRat) -> QuarticElem {
    x.to_quartic()
}

/// Entry formulas of `[[a, b], [c, d]]·M·[[a, b], [c, d]]⁻¹` for
/// `M = [[ζ, η], [μ, ν]]` and determinant 1.
fn conj_entries(abcd: &[QuarticElem; 4], m: [&QuarticElem; 4]) -> [QuarticElem; 4] {
    let [a, b, c, d] = abcd;
    let [z, e, mu, nu] = m;
    let zn = z - nu;
    [
        &(&(&(&(a * d) * z) - &(&(b * c) * nu)) + &(&(b * d) * mu)) - &(&(a * c) * e),
        &(&(&(a * a) * e) - &(&(b * b) * mu)) - &(&(a * b) * &zn),
        &(&(&(d * d) * mu) - &(&(c * c) * e)) + &(&(c * d) * &zn),
        &(&(&(&(a * d) * nu) - &(&(b * c) * z)) + &(&(a * c) * e)) - &(&(b * d) * mu),
    ]
}

/// `(S₁, R₁, S₂, R₂)` at `n` for Δ-values `(X, Y, Z, W)`.
fn s_and_r(n: i64, v: [&QuarticElem; 4]) -> [QuarticElem; 4] {
    let [x, y, z, w] = v;
    let t = |k: i64| q4(&lucas_t(k));
    let tau = q4(&lambda_sum());
    let two = QuarticElem::from_int(2);
    let s1 = &(&(&t(2 * n) * &(w - x)) - &(&t(2 * n - 1) * z)) + &(&t(2 * n + 1) * y);
    let r1 = &(&(&t(2) * x) - &(&two * w)) + &(&tau * &(z - y));
    let s2 = &(&(&t(2 * n) * &(x - w)) + &(&t(2 * n - 1) * z)) - &(&t(2 * n + 1) * y);
    let r2 = &(&(&t(2) * w) - &(&two * x)) + &(&tau * &(y - z));
    [s1, r1, s2, r2]
}

/// Checks the four `L²Ent` expansions of the Δ-matrix built from
/// `abcd` and Δ-values `(X, Y, Z, W)` at exponent `n`.
fn entry_expansions(n: i64, abcd: &[QuarticElem; 4], v: [&QuarticElem; 4]) -> bool {
    let [a, b, c, d] = abcd;
    let [x, y, z, w] = v;
    let l2 = q4(&l_squared());
    let one = QuarticElem::one();
    let two = QuarticElem::from_int(2);
    let tau = q4(&lambda_sum());
    let t = |k: i64| q4(&lucas_t(k));
    let ent11 =
        &(&(&(&one + &(&(a * d) * x)) - &(&(b * c) * w)) + &(&(b * d) * z)) - &(&(a * c) * y);
    let ent22 =
        &(&(&(&one + &(&(a * d) * w)) - &(&(b * c) * x)) + &(&(a * c) * y)) - &(&(b * d) * z);
    let ent12 = &(&(&(a * a) * y) - &(&(b * b) * z)) - &(&(a * b) * &(x - w));
    let ent21 = &(&(&(d * d) * z) - &(&(c * c) * y)) + &(&(c * d) * &(x - w));
    let [s1, r1, s2, r2] = s_and_r(n, v);
    let rhs12 = &(&(&(&t(2 * n + 2) - &two) * y) - &(&(&t(2 * n) - &two) * z))
        - &(&(&t(2 * n + 1) - &tau) * &(x - w));
    // L²cₙdₙ = T_{2n−1} − τ enters with a plus sign
    let rhs21 = &(&(&(&t(2 * n - 2) - &two) * z) - &(&(&t(2 * n) - &two) * y))
        + &(&(&t(2 * n - 1) - &tau) * &(x - w));
    &l2 * &ent11 == &(&l2 + &s1) + &r1
        && &l2 * &ent22 == &(&l2 + &s2) + &r2
        && &l2 * &ent12 == rhs12
        && &l2 * &ent21 == rhs21
}

/// Closed forms for `Qⁿ σ₂(A) Q⁻ⁿ`, checked against direct computation.
pub fn conjugation_record(a: &RingMat2, n: i64) -> Result<ConjugationRecord> {
    let (_, q) = paper_generators();
    let sa = a.sigma2();
    let qn = q.mat_pow(n)?;
    let qn_inv = q.mat_pow(-n)?;
    let direct = qn.mat_mul(&sa).mat_mul(&qn_inv);
    let sa_inv = sa.mat_inv()?;
    let inverse_direct = qn_inv.mat_mul(&sa_inv).mat_mul(&qn);
    let [a_n, b_n, c_n, d_n] = q_power_entries(n);
    let abcd = [q4(&a_n), q4(&b_n), q4(&c_n), q4(&d_n)];
    let abcd_inv = q_power_entries(-n).map(|x| q4(&x));
    let from_formula = RingMat2::from_entries(conj_entries(&abcd, sa.entries()));
    let from_formula_inv = RingMat2::from_entries(conj_entries(&abcd_inv, sa_inv.entries()));
    let closed_form_matches = RingMat2::from_entries(abcd.clone()) == qn
        && from_formula == direct
        && from_formula_inv == inverse_direct;

    let one = QuarticElem::one();
    let deltas = (|| -> Result<[QuarticElem; 4]> {
        Ok([
            delta0(&(&sa.e11 - &one))?,
            delta0(&sa.e12)?,
            delta0(&sa.e21)?,
            delta0(&(&sa.e22 - &one))?,
        ])
    })();
    let delta = deltas.ok().map(|[x, y, z, w]| {
        let [s1, r1, s2, r2] = s_and_r(n, [&x, &y, &z, &w]);
        // σ₂(A)⁻¹ has entries (ν, −η, −μ, ζ); Δ is odd
        let (yi, zi) = (-&y, -&z);
        let inv_vals = [&w, &yi, &zi, &x];
        let [s1p, r1p, s2p, r2p] = s_and_r(-n, inv_vals);
        let entries_match = entry_expansions(n, &abcd, [&x, &y, &z, &w])
            && entry_expansions(-n, &abcd_inv, inv_vals);
        let gammas = [
            &sa.e11 - &one,
            sa.e12.clone(),
            sa.e21.clone(),
            &sa.e22 - &one,
        ]
        .iter()
        .zip([&x, &y, &z, &w])
        .map(|(e, d)| e - d)
        .collect::<Vec<_>>();
        let g = conj_entries(&abcd, [&gammas[0], &gammas[1], &gammas[2], &gammas[3]]);
        let d = conj_entries(&abcd, [&x, &y, &z, &w]);
        // conjugation is linear, so the identity shift comes back unchanged
        let mut recombined = [&g[0] + &d[0], &g[1] + &d[1], &g[2] + &d[2], &g[3] + &d[3]];
        recombined[0] = &recombined[0] + &one;
        recombined[3] = &recombined[3] + &one;
        let decomposition_matches = RingMat2::from_entries(recombined) == direct;
        let tau = q4(&lambda_sum());
        let two = QuarticElem::from_int(2);
        let bracket = &(&tau * &(&y - &z)) + &(&two * &(&w - &x));
        let difference_identity = &s1 - &s1p == &q4(&lucas_t(2 * n)) * &bracket;
        DeltaTerms {
            x,
            y,
            z,
            w,
            s1,
            s2,
            r1,
            r2,
            s1p,
            s2p,
            r1p,
            r2p,
            entries_match,
            decomposition_matches,
            difference_identity,
        }
    });
    Ok(ConjugationRecord {
        n,
        a_n,
        b_n,
        c_n,
        d_n,
        direct,
        inverse_direct,
        closed_form_matches,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `[[1, x], [0, 1]]·[[1, 0], [y, 1]]·[[1, z], [0, 1]]` with the `σ₂`
    /// images of `x, y, z` positive, so all four shifted entries are signed.
    fn signed_sample() -> RingMat2 {
        let up = |x: [i64; 4]| {
            RingMat2::new(
                QuarticElem::one(),
                QuarticElem::from_ints(x),
                QuarticElem::zero(),
                QuarticElem::one(),
            )
        };
        let lo = |x: [i64; 4]| {
            RingMat2::new(
                QuarticElem::one(),
                QuarticElem::zero(),
                QuarticElem::from_ints(x),
                QuarticElem::one(),
            )
        };
        up([1, -2, 0, -1])
            .mat_mul(&lo([2, 0, 1, -1]))
            .mat_mul(&up([0, -1, 1, 0]))
    }

    #[test]
    fn identities() {
        assert_eq!(l_squared(), QuadRat::from_ints(13, 12));
        assert_eq!(
            l_inv_squared(),
            QuadRat::new(crate::ring::ratio(-13, 119), crate::ring::ratio(12, 119))
        );
        assert_eq!(q_power_entries(1)[0], lambda_sum());
    }

    #[test]
    fn record_at_zero_and_one() {
        let a = signed_sample();
        let r0 = conjugation_record(&a, 0).unwrap();
        assert_eq!(r0.direct, a.sigma2());
        assert!(r0.a_n == QuadRat::one() && r0.b_n.is_zero());
        for n in 0..5 {
            let r = conjugation_record(&a, n).unwrap();
            assert!(r.closed_form_matches, "n = {n}");
            let d = r.delta.expect("signed sample");
            assert!(
                d.entries_match && d.decomposition_matches && d.difference_identity,
                "n = {n}"
            );
            assert_eq!(d.r1, r0.delta.as_ref().unwrap().r1);
        }
    }

    #[test]
    fn unsigned_entries_leave_delta_out() {
        let a = RingMat2::new(
            QuarticElem::one(),
            QuarticElem::from_ints([1, 1, 0, 0]),
            QuarticElem::zero(),
            QuarticElem::one(),
        );
        let r = conjugation_record(&a, 2).unwrap();
        assert!(r.closed_form_matches);
        assert!(r.delta.is_none());
    }
}
