use super::{QuadRat, QuarticElem, Rational, Sign};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn pow2(p: u32) -> BigInt {
    BigInt::one() << p
}

/// `[r, r + 2^-p]` containing `β = 2^(1/4)`.
pub fn beta_enclosure(prec: u32) -> Interval {
    // floor(2^p · 2^(1/4)) = floor((2^(4p+1))^(1/4))
    let r = (BigInt::one() << (4 * prec + 1)).nth_root(4);
    let d = pow2(prec);
    Interval::new(Rational::new(r.clone(), d.clone()), Rational::new(r + 1, d))
}

/// `[r, r + 2^-p]` containing `2^(1/κ)`.
pub fn root2_enclosure(kappa: u32, prec: u32) -> Interval {
    let r = (BigInt::one() << (kappa * prec + 1)).nth_root(kappa);
    let d = pow2(prec);
    Interval::new(Rational::new(r.clone(), d.clone()), Rational::new(r + 1, d))
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Sign of every point of the interval, if it is constant.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            let m = if -&self.lo > self.hi {
                -&self.lo
            } else {
                self.hi.clone()
            };
            Interval::new(Rational::zero(), m)
        }
    }

    pub fn max(&self, o: &Self) -> Self {
        Interval::new(
            self.lo.clone().max(o.lo.clone()),
            self.hi.clone().max(o.hi.clone()),
        )
    }

    pub fn min(&self, o: &Self) -> Self {
        Interval::new(
            self.lo.clone().min(o.lo.clone()),
            self.hi.clone().min(o.hi.clone()),
        )
    }

    /// True when every point is strictly below every point of `o`.
    pub fn strictly_below(&self, o: &Self) -> bool {
        self.hi < o.lo
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let a = &self.lo * r;
        let b = &self.hi * r;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    /// Enclosure of `√x` over the nonnegative part, with outward rounding at
    /// `2^-prec`.
    pub fn sqrt(&self, prec: u32) -> Self {
        let scale = Rational::from_integer(pow2(2 * prec));
        let d = pow2(prec);
        let lo = if self.lo.is_positive() {
            let s = (&self.lo * &scale).floor().to_integer();
            Rational::new(s.sqrt(), d.clone())
        } else {
            Rational::zero()
        };
        let hi = if self.hi.is_positive() {
            let s = (&self.hi * &scale).ceil().to_integer();
            Rational::new(s.sqrt() + 1, d)
        } else {
            Rational::zero()
        };
        Interval::new(lo, hi)
    }

    pub fn sqrt2(prec: u32) -> Self {
        root2_enclosure(2, prec)
    }

    pub fn of_quad(x: &QuadRat, prec: u32) -> Self {
        &Interval::point(x.u.clone()) + &Interval::sqrt2(prec).scale(&x.v)
    }

    pub fn of_quartic(x: &QuarticElem, prec: u32) -> Self {
        if x.is_rational() {
            return Interval::point(x.coeff(0));
        }
        let b = beta_enclosure(prec);
        let b2 = &b * &b;
        let b3 = &b2 * &b;
        let powers = [Interval::point(Rational::one()), b, b2, b3];
        let mut acc = Interval::zero();
        for (i, p) in powers.iter().enumerate() {
            let c = x.coeff(i);
            if !c.is_zero() {
                acc = &acc + &p.scale(&c);
            }
        }
        acc
    }

    /// Outward-rounded `f64` endpoints.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (round_down(&self.lo), round_up(&self.hi))
    }

    pub fn to_f64_mid(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }
}

fn round_down(r: &Rational) -> f64 {
    let f = r.to_f64().unwrap_or(f64::NEG_INFINITY);
    match Rational::from_float(f) {
        Some(g) if &g > r => f.next_down(),
        Some(_) => f,
        None => f64::NEG_INFINITY,
    }
}

fn round_up(r: &Rational) -> f64 {
    let f = r.to_f64().unwrap_or(f64::INFINITY);
    match Rational::from_float(f) {
        Some(g) if &g < r => f.next_up(),
        Some(_) => f,
        None => f64::INFINITY,
    }
}

/// Repeatedly evaluates `f` at doubling precision until the enclosure has a
/// definite sign; gives up after `max_prec` bits.
pub fn sign_by_refinement(
    start_prec: u32,
    max_prec: u32,
    f: impl Fn(u32) -> Interval,
) -> Option<Sign> {
    let mut prec = start_prec.max(8);
    loop {
        let iv = f(prec);
        if let Some(s) = iv.sign() {
            if s != Sign::Zero {
                return Some(s);
            }
        }
        if prec >= max_prec {
            return None;
        }
        prec = (prec * 2).min(max_prec);
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (lo, hi) = self.to_f64_bounds();
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&lo)?;
        seq.serialize_element(&hi)?;
        seq.end()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_f64_bounds();
        write!(f, "[{lo:e}, {hi:e}]")
    }
}

impl<'a> Add<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl<'a> Sub<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
}

impl<'a> Mul<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    #[test]
    fn beta_bracket() {
        let b = beta_enclosure(64);
        let b4 = {
            let b2 = &b * &b;
            &b2 * &b2
        };
        assert!(b4.contains(&ratio(2, 1)));
        assert!(b.width() <= Rational::new(1.into(), pow2(64)));
    }

    #[test]
    fn sqrt_encloses() {
        let s = Interval::point(ratio(2, 1)).sqrt(40);
        let sq = &s * &s;
        assert!(sq.contains(&ratio(2, 1)));
        let z = Interval::point(ratio(0, 1)).sqrt(10);
        assert_eq!(z.lo, ratio(0, 1));
    }

    #[test]
    fn three_minus_two_sqrt2() {
        let iv = Interval::of_quad(&QuadRat::from_ints(3, -2), 64);
        assert!(iv.lo > ratio(171, 1000) && iv.hi < ratio(172, 1000));
    }

    #[test]
    fn outward_rounding() {
        let iv = Interval::point(ratio(1, 3));
        let (lo, hi) = iv.to_f64_bounds();
        assert!(lo < hi);
        assert!(Rational::from_float(lo).unwrap() <= ratio(1, 3));
        assert!(Rational::from_float(hi).unwrap() >= ratio(1, 3));
    }
}
