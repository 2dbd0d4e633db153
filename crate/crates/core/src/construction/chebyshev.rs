use crate::ring::{Interval, QuadRat, Sign};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

/// `λⁿ + λ⁻ⁿ = φₙ(3 + 2√2) = Aₙ + Bₙ√2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChebyshevPair {
    pub n: u64,
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl ChebyshevPair {
    pub fn as_quad(&self) -> QuadRat {
        QuadRat::new(self.a.clone().into(), self.b.clone().into())
    }
}

/// `φ₀ … φ_{n_max}` at `3 + 2√2` via `φ_{k+1} = xφ_k − φ_{k−1}`.
pub fn chebyshev_table(n_max: u64) -> Vec<ChebyshevPair> {
    let x = QuadRat::from_ints(3, 2);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let mut prev = QuadRat::from_ints(2, 0);
    let mut cur = x.clone();
    for n in 0..=n_max {
        let (a, b) = (prev.u.to_integer(), prev.v.to_integer());
        out.push(ChebyshevPair { n, a, b });
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    out
}

pub fn chebyshev(n: u64) -> ChebyshevPair {
    chebyshev_table(n).pop().expect("nonempty table")
}

#[derive(Debug, Clone, Serialize)]
pub struct PellRow {
    pub n: u64,
    pub a: String,
    pub b: String,
    /// `Aₙ² − 2Bₙ²`, exact.
    pub norm: String,
    /// `|Aₙ − √2·Bₙ|`.
    pub gap: Interval,
    /// `Aₙ/Bₙ − √2`.
    pub ratio_error: Interval,
}

#[derive(Debug, Clone, Serialize)]
pub struct PellReport {
    pub rows: Vec<PellRow>,
    /// `|Aₙ² − 2Bₙ²|` strictly increasing over `2 ≤ n ≤ n_max`.
    pub norm_growth_monotone: bool,
    /// `|Aₙ − √2Bₙ| ≤ 2` for every row, decided exactly.
    pub gap_bounded_by_two: bool,
    /// `|Aₙ/Bₙ − √2| ≤ 2/Bₙ` for `n ≥ 1`, so the ratio tends to `√2`.
    pub ratio_converges: bool,
    /// Whether `|Aₙ − √2Bₙ| → ∞` is supported by the table.
    pub divergence_verdict: &'static str,
}

/// Tabulates `Aₙ, Bₙ` for `n ≤ n_max` and tests whether `|Aₙ − √2Bₙ|`
/// grows. `Aₙ − √2Bₙ` is the Galois conjugate of `λⁿ + λ⁻ⁿ`, i.e. the trace
/// of the `n`-th power of an elliptic matrix, so it stays in `[−2, 2]`.
pub fn pell_divergence(n_max: u64) -> PellReport {
    let prec = 96;
    let table = chebyshev_table(n_max.max(2));
    let two = QuadRat::from_ints(2, 0);
    let mut rows = Vec::new();
    let mut bounded = true;
    for c in &table {
        let conj = c.as_quad().conj();
        bounded &= (&two - &conj.abs()).sign() != Sign::Negative;
        let gap = Interval::of_quad(&conj, prec).abs();
        let ratio_error = if c.b.is_positive() {
            let r = QuadRat::new(
                num_rational::BigRational::new(c.a.clone(), c.b.clone()),
                crate::ring::rat(-1),
            );
            Interval::of_quad(&r, prec)
        } else {
            Interval::of_quad(&QuadRat::from_ints(0, -1), prec)
        };
        rows.push(PellRow {
            n: c.n,
            a: c.a.to_string(),
            b: c.b.to_string(),
            norm: (&c.a * &c.a - BigInt::from(2) * &c.b * &c.b).to_string(),
            gap,
            ratio_error,
        });
    }
    let norms: Vec<BigInt> = table
        .iter()
        .map(|c| (&c.a * &c.a - BigInt::from(2) * &c.b * &c.b).abs())
        .collect();
    let norm_growth_monotone = norms[2..].windows(2).all(|w| w[1] > w[0]);
    let ratio_converges = table[1..].iter().all(|c| {
        let err = QuadRat::new(
            num_rational::BigRational::new(c.a.clone(), c.b.clone()),
            crate::ring::rat(-1),
        )
        .abs();
        let bound = QuadRat::new(
            num_rational::BigRational::new(2.into(), c.b.clone()),
            crate::ring::rat(0),
        );
        err.cmp_exact(&bound) != std::cmp::Ordering::Greater
    });
    PellReport {
        rows,
        norm_growth_monotone,
        gap_bounded_by_two: bounded,
        ratio_converges,
        divergence_verdict: if bounded { "refuted" } else { "open" },
    }
}
