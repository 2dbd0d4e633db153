//! Exact arithmetic in `Q[√2]` and `Q[β]` with `β = 2^(1/4)`, the four Galois
//! embeddings `β ↦ β·i^k`, validated intervals, and the scalar quantities built
//! on top of them (field norm, signedness, the γ/Δ splitting).

mod cubic;
mod embed;
mod interval;
mod qext;
mod quad;
mod quartic;
mod scalar;

pub use cubic::CubicElem;
pub use embed::{galois, EmbeddedComplex};
pub use interval::{beta_enclosure, root2_enclosure, sign_by_refinement, Interval};
pub use qext::QuadExt;
pub use quad::QuadRat;
pub use quartic::QuarticElem;
pub use scalar::{
    coeff_norm, coeff_norm_term, coeff_terms, delta, delta1, delta2, field_quantity_n, gamma,
    gamma1, gamma2, in_s, inequality1, inequality2_diagnostic, sign_of, signedness, Ineq1Record,
    Ineq2Record, Signedness,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_int(x: &BigInt) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_rat(x: &Rational) -> Sign {
        Sign::of_int(x.numer())
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

/// Sign of `u + v·√r` given the signs of `u`, `v` and of `u² − v²·r`
/// (the latter only consulted when `u` and `v` disagree).
pub(crate) fn sign_of_surd(su: Sign, sv: Sign, norm: impl FnOnce() -> Sign) -> Sign {
    if sv == Sign::Zero {
        return su;
    }
    if su == Sign::Zero || su == sv {
        return sv;
    }
    match norm() {
        Sign::Positive => su,
        Sign::Negative => sv,
        Sign::Zero => Sign::Zero,
    }
}

/// Sign of `u + v√2` for integers.
pub(crate) fn sign_z_sqrt2(u: &BigInt, v: &BigInt) -> Sign {
    sign_of_surd(Sign::of_int(u), Sign::of_int(v), || {
        Sign::of_int(&(u * u - BigInt::from(2) * v * v))
    })
}

/// Parses a rational written as `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rational::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(p))
    }
}

/// Canonical text form of a rational: `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
