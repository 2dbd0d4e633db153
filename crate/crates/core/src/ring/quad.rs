use super::{fmt_rational, sign_of_surd, QuarticElem, Rational, Sign};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `u + v√2` with rational `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    pub u: Rational,
    pub v: Rational,
}

impl QuadRat {
    pub fn new(u: Rational, v: Rational) -> Self {
        QuadRat { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        QuadRat::new(super::rat(u), super::rat(v))
    }

    pub fn zero() -> Self {
        QuadRat::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        QuadRat::new(Rational::one(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// The nontrivial automorphism `√2 ↦ −√2`.
    pub fn conj(&self) -> Self {
        QuadRat::new(self.u.clone(), -self.v.clone())
    }

    /// `u² − 2v²`.
    pub fn norm(&self) -> Rational {
        &self.u * &self.u - Rational::from_integer(2.into()) * &self.v * &self.v
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadRat::new(&self.u / &n, -&self.v / &n))
    }

    pub fn sign(&self) -> Sign {
        sign_of_surd(Sign::of_rat(&self.u), Sign::of_rat(&self.v), || {
            Sign::of_rat(&self.norm())
        })
    }

    pub fn cmp_exact(&self, other: &Self) -> std::cmp::Ordering {
        (self - other).sign().to_ordering()
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    /// The same real number viewed in `Q[β]` (`√2 = β²`).
    pub fn to_quartic(&self) -> QuarticElem {
        QuarticElem::from_rationals([
            self.u.clone(),
            Rational::zero(),
            self.v.clone(),
            Rational::zero(),
        ])
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.u.to_f64().unwrap_or(f64::NAN)
            + self.v.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", fmt_rational(&self.u), fmt_rational(&self.v))
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn add(self, o: &QuadRat) -> QuadRat {
        QuadRat::new(&self.u + &o.u, &self.v + &o.v)
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn sub(self, o: &QuadRat) -> QuadRat {
        QuadRat::new(&self.u - &o.u, &self.v - &o.v)
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn mul(self, o: &QuadRat) -> QuadRat {
        let two = Rational::from_integer(2.into());
        QuadRat::new(
            &self.u * &o.u + two * &self.v * &o.v,
            &self.u * &o.v + &self.v * &o.u,
        )
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-self.u.clone(), -self.v.clone())
    }
}

impl Add for QuadRat {
    type Output = QuadRat;
    fn add(self, o: QuadRat) -> QuadRat {
        &self + &o
    }
}

impl Sub for QuadRat {
    type Output = QuadRat;
    fn sub(self, o: QuadRat) -> QuadRat {
        &self - &o
    }
}

impl Mul for QuadRat {
    type Output = QuadRat;
    fn mul(self, o: QuadRat) -> QuadRat {
        &self * &o
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_compares_against_sqrt2() {
        assert_eq!(QuadRat::from_ints(-13, 12).sign(), Sign::Positive);
        assert_eq!(QuadRat::from_ints(3, -2).sign(), Sign::Positive);
        assert_eq!(QuadRat::from_ints(-3, 2).sign(), Sign::Negative);
        assert_eq!(QuadRat::from_ints(1, -1).sign(), Sign::Negative);
        assert_eq!(QuadRat::zero().sign(), Sign::Zero);
    }

    #[test]
    fn inverse_of_unit() {
        let x = QuadRat::from_ints(3, 2);
        assert_eq!(x.inv().unwrap(), QuadRat::from_ints(3, -2));
        assert_eq!(QuadRat::zero().inv(), Err(Error::DivisionByZero));
    }
}
