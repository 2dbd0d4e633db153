//! Scalar quantities on `Q[β]`: the field norm `N`, signedness, the γ/Δ
//! splitting and the coefficient norm.

use super::{galois, QuarticElem, Rational, Sign};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub fn sign_of(x: &QuarticElem) -> Sign {
    x.sign()
}

/// `N(x) = |σ₀(x)σ₁(x)σ₂(x)σ₃(x)|`.
///
/// Computed twice: from the closed coefficient formula and by multiplying the
/// four embedded images. A disagreement is an internal error.
pub fn field_quantity_n(x: &QuarticElem) -> Result<Rational> {
    let [a, m, p, e] = x.coeffs();
    let k = |n: i64| Rational::from_integer(n.into());
    let s = &a * &a + k(2) * &p * &p - k(4) * &m * &e;
    let t = k(2) * &a * &p - &m * &m - k(2) * &e * &e;
    let formula = (&s * &s - k(2) * &t * &t).abs();

    let real_pair = &galois(x, 0).re * &galois(x, 2).re;
    let complex_pair = galois(x, 1).norm_sq();
    let prod = &real_pair * &complex_pair;
    let product = prod
        .as_rational()
        .ok_or_else(|| Error::InternalMismatch(format!("conjugate product {prod} is irrational")))?
        .abs();
    if product != formula {
        return Err(Error::InternalMismatch(format!(
            "N({x}): formula {formula} vs product {product}"
        )));
    }
    Ok(formula)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Signedness {
    PositiveElem,
    NegativeElem,
    Unsigned,
}

pub fn signedness(x: &QuarticElem) -> Signedness {
    if x.is_zero() {
        return Signedness::Unsigned;
    }
    let nums = x.numerators();
    if nums.iter().all(|n| !n.is_negative()) {
        Signedness::PositiveElem
    } else if nums.iter().all(|n| !n.is_positive()) {
        Signedness::NegativeElem
    } else {
        Signedness::Unsigned
    }
}

/// The four terms `(a, mβ, pβ², eβ³)` as elements of `Q[β]`.
pub fn coeff_terms(x: &QuarticElem) -> [QuarticElem; 4] {
    let c = x.coeffs();
    std::array::from_fn(|i| QuarticElem::monomial(c[i].clone(), i))
}

/// `‖x‖ = max{|a|, |m|, |p|, |e|}`.
pub fn coeff_norm(x: &QuarticElem) -> Rational {
    x.coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// `max{|a|, |mβ|, |pβ²|, |eβ³|}` as a real number of `Q[β]`.
pub fn coeff_norm_term(x: &QuarticElem) -> QuarticElem {
    max_exact(coeff_terms(x).iter().map(QuarticElem::abs))
}

fn min_exact(it: impl Iterator<Item = QuarticElem>) -> QuarticElem {
    it.reduce(|a, b| if b.cmp_exact(&a).is_lt() { b } else { a })
        .unwrap_or_else(QuarticElem::zero)
}

fn max_exact(it: impl Iterator<Item = QuarticElem>) -> QuarticElem {
    it.reduce(|a, b| if b.cmp_exact(&a).is_gt() { b } else { a })
        .unwrap_or_else(QuarticElem::zero)
}

/// Applies `f` to the positive representative and restores the sign.
fn odd_extension(
    x: &QuarticElem,
    f: impl Fn(&[QuarticElem; 4]) -> QuarticElem,
) -> Result<QuarticElem> {
    match signedness(x) {
        Signedness::PositiveElem => Ok(f(&coeff_terms(x))),
        Signedness::NegativeElem => Ok(-f(&coeff_terms(&-x))),
        Signedness::Unsigned => Err(Error::UnsignedElement),
    }
}

/// `γ(x) = 4·min{a, mβ, pβ², eβ³}` for positive `x`, odd for negative `x`.
pub fn gamma(x: &QuarticElem) -> Result<QuarticElem> {
    odd_extension(x, |t| min_exact(t.iter().cloned()).scale_int(4))
}

/// `γ₁(x) = 2·min{a, pβ²}`.
pub fn gamma1(x: &QuarticElem) -> Result<QuarticElem> {
    odd_extension(x, |t| {
        min_exact([t[0].clone(), t[2].clone()].into_iter()).scale_int(2)
    })
}

/// `γ₂(x) = 2·min{mβ, eβ³}`.
pub fn gamma2(x: &QuarticElem) -> Result<QuarticElem> {
    odd_extension(x, |t| {
        min_exact([t[1].clone(), t[3].clone()].into_iter()).scale_int(2)
    })
}

pub fn delta(x: &QuarticElem) -> Result<QuarticElem> {
    Ok(x - &gamma(x)?)
}

/// `Δ₁(x) = (a + pβ²) − γ₁(x)`.
pub fn delta1(x: &QuarticElem) -> Result<QuarticElem> {
    let (even, _) = x.split_parity();
    Ok(&even - &gamma1(x)?)
}

/// `Δ₂(x) = (mβ + eβ³) − γ₂(x)`.
pub fn delta2(x: &QuarticElem) -> Result<QuarticElem> {
    let (_, odd) = x.split_parity();
    Ok(&odd - &gamma2(x)?)
}

/// Membership in `{x ∈ Z[β] : 0 < |x| < ε, |σ₁(x)| < c}`.
pub fn in_s(x: &QuarticElem, eps: &Rational, c: &Rational) -> Result<bool> {
    if !x.is_integral() {
        return Err(Error::NonIntegralInput);
    }
    if !eps.is_positive() || !c.is_positive() {
        return Err(Error::InvalidArgument("ε and c must be positive".into()));
    }
    if x.is_zero() {
        return Ok(false);
    }
    let small = (&QuarticElem::from_rational(eps.clone()) - &x.abs()).sign() == Sign::Positive;
    if !small {
        return Ok(false);
    }
    let s1 = galois(x, 1).norm_sq();
    let c2 = QuarticElem::from_rational(c * c);
    Ok((&c2 - &s1).sign() == Sign::Positive)
}

/// One evaluation of `|Δ(xy)| ≤ |Δ(x)Δ(y)|` on signed inputs.
#[derive(Debug, Clone, Serialize)]
pub struct Ineq1Record {
    pub x: String,
    pub y: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

pub fn inequality1(x: &QuarticElem, y: &QuarticElem) -> Result<Ineq1Record> {
    let dx = delta(x)?;
    let dy = delta(y)?;
    let dxy = delta(&(x * y))?;
    let lhs = dxy.abs();
    let rhs = (&dx * &dy).abs();
    Ok(Ineq1Record {
        x: x.to_string(),
        y: y.to_string(),
        holds: lhs.cmp_exact(&rhs).is_le(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Diagnostic for the split `xy = z + u` with `z = x·γ(y)`, `u = x·Δ(y)`:
/// reports `‖u‖` against `8‖x‖·|Δ(y)|` and whether `z` is signed.
#[derive(Debug, Clone, Serialize)]
pub struct Ineq2Record {
    pub z: String,
    pub u: String,
    pub u_norm: String,
    pub bound: f64,
    pub z_signed: bool,
    pub holds: bool,
}

pub fn inequality2_diagnostic(x: &QuarticElem, y: &QuarticElem) -> Result<Ineq2Record> {
    let gy = gamma(y)?;
    let dy = delta(y)?;
    let z = x * &gy;
    let u = x * &dy;
    let u_norm = coeff_norm(&u);
    let bound = dy.abs().scale(&(coeff_norm(x) * Rational::from_integer(BigInt::from(8))));
    let holds = (&bound - &QuarticElem::from_rational(u_norm.clone())).sign() != Sign::Negative;
    Ok(Ineq2Record {
        z_signed: signedness(&z) != Signedness::Unsigned,
        z: z.to_string(),
        u: u.to_string(),
        u_norm: super::fmt_rational(&u_norm),
        bound: bound.to_f64(),
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn q(c: [i64; 4]) -> QuarticElem {
        QuarticElem::from_ints(c)
    }

    #[test]
    fn field_norm_examples() {
        assert_eq!(field_quantity_n(&QuarticElem::zero()).unwrap(), rat(0));
        assert_eq!(field_quantity_n(&QuarticElem::beta()).unwrap(), rat(2));
        assert_eq!(field_quantity_n(&q([1, 1, 0, 0])).unwrap(), rat(1));
    }

    #[test]
    fn signedness_examples() {
        assert_eq!(signedness(&q([1, 1, 0, 0])), Signedness::PositiveElem);
        assert_eq!(signedness(&q([-1, 0, 0, -1])), Signedness::NegativeElem);
        assert_eq!(signedness(&q([1, -1, 0, 0])), Signedness::Unsigned);
        assert_eq!(signedness(&QuarticElem::zero()), Signedness::Unsigned);
    }

    #[test]
    fn gamma_examples() {
        let x = q([1, 1, 1, 1]);
        assert_eq!(gamma(&x).unwrap(), QuarticElem::from_int(4));
        assert_eq!(delta(&x).unwrap(), q([-3, 1, 1, 1]));
        assert_eq!(gamma(&-&x).unwrap(), QuarticElem::from_int(-4));
        // min{2, 3√2} = 2
        assert_eq!(gamma1(&q([2, 1, 3, 1])).unwrap(), QuarticElem::from_int(4));
        assert_eq!(gamma(&q([1, -1, 0, 0])), Err(Error::UnsignedElement));
    }

    #[test]
    fn coeff_norm_examples() {
        assert_eq!(coeff_norm(&QuarticElem::zero()), rat(0));
        assert_eq!(coeff_norm(&q([5, -3, 1, -2])), rat(5));
        assert_eq!(
            coeff_norm(&QuarticElem::monomial(ratio(1, 3), 3)),
            ratio(1, 3)
        );
        assert_eq!(coeff_norm_term(&q([0, 0, 0, 3])), q([0, 0, 0, 3]));
    }

    #[test]
    fn in_s_examples() {
        assert!(!in_s(&QuarticElem::zero(), &rat(1), &rat(1)).unwrap());
        // |σ₁(3 − 2β²)| = 3 + 2√2 ≈ 5.83 exceeds 4
        assert!(!in_s(&q([3, 0, -2, 0]), &ratio(1, 2), &rat(4)).unwrap());
        assert!(in_s(&q([3, 0, -2, 0]), &ratio(1, 2), &rat(6)).unwrap());
        assert!(!in_s(&q([1, 1, 0, 0]), &rat(1), &rat(1)).unwrap());
        let half = QuarticElem::from_rational(ratio(1, 2));
        assert_eq!(in_s(&half, &rat(1), &rat(1)), Err(Error::NonIntegralInput));
    }
}
