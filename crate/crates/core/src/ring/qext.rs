use super::{sign_of_surd, Interval, QuarticElem, Sign};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `u + v·√d` with `u, v, d` real elements of `Q[β]` and `d > 0`.
///
/// Used for eigenvalues `(t ± √(t² − 4))/2` and eigenvector coordinates of
/// real 2×2 matrices. Two values only combine when they share the radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub u: QuarticElem,
    pub v: QuarticElem,
    pub d: QuarticElem,
}

impl QuadExt {
    pub fn new(u: QuarticElem, v: QuarticElem, d: QuarticElem) -> Self {
        debug_assert!(d.sign() != Sign::Negative);
        QuadExt { u, v, d }
    }

    pub fn from_base(u: QuarticElem, d: &QuarticElem) -> Self {
        QuadExt::new(u, QuarticElem::zero(), d.clone())
    }

    /// `√d` itself.
    pub fn sqrt_of(d: &QuarticElem) -> Self {
        QuadExt::new(QuarticElem::zero(), QuarticElem::one(), d.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// `u − v√d`.
    pub fn conj(&self) -> Self {
        QuadExt::new(self.u.clone(), -&self.v, self.d.clone())
    }

    /// `u² − v²d`, the product with the conjugate.
    pub fn norm(&self) -> QuarticElem {
        &(&self.u * &self.u) - &(&(&self.v * &self.v) * &self.d)
    }

    pub fn sign(&self) -> Sign {
        sign_of_surd(self.u.sign(), self.v.sign(), || self.norm().sign())
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact equality of values, also across different radicands: with
    /// `P = (u − u') + v√d` and `R = v'√d'`, the values agree iff `P` and `R`
    /// have the same sign and `P² − R²` (a surd over `√d`) vanishes.
    pub fn value_eq(&self, o: &Self) -> bool {
        if self.d == o.d || self.v.is_zero() || o.v.is_zero() {
            return (self - o).is_zero();
        }
        let s = &self.u - &o.u;
        let p = QuadExt::new(s.clone(), self.v.clone(), self.d.clone());
        let (sp, sr) = (p.sign(), o.v.sign());
        if sp != sr {
            return false;
        }
        if sp == Sign::Zero {
            return true;
        }
        let a = &(&(&s * &s) + &(&(&self.v * &self.v) * &self.d)) - &(&(&o.v * &o.v) * &o.d);
        let b = (&s * &self.v).scale_int(2);
        QuadExt::new(a, b, self.d.clone()).sign() == Sign::Zero
    }

    pub fn cmp_exact(&self, o: &Self) -> std::cmp::Ordering {
        (self - o).sign().to_ordering()
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ni = n.inv()?;
        Ok(QuadExt::new(
            &self.u * &ni,
            -(&self.v * &ni),
            self.d.clone(),
        ))
    }

    pub fn scale(&self, c: &QuarticElem) -> Self {
        QuadExt::new(&self.u * c, &self.v * c, self.d.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadExt::from_base(QuarticElem::one(), &self.d);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn interval(&self, prec: u32) -> Interval {
        let d = Interval::of_quartic(&self.d, prec).sqrt(prec);
        &Interval::of_quartic(&self.u, prec) + &(&Interval::of_quartic(&self.v, prec) * &d)
    }

    pub fn to_f64(&self) -> f64 {
        self.u.to_f64() + self.v.to_f64() * self.d.to_f64().sqrt()
    }

    /// The value as an element of `Q[β]` when the radical part vanishes.
    pub fn as_base(&self) -> Option<QuarticElem> {
        self.v.is_zero().then(|| self.u.clone())
    }

    fn check(&self, o: &Self) {
        assert!(
            self.d == o.d || self.v.is_zero() || o.v.is_zero(),
            "mixing radicands {} and {}",
            self.d,
            o.d
        );
    }

    fn radicand<'a>(&'a self, o: &'a Self) -> &'a QuarticElem {
        if self.v.is_zero() {
            &o.d
        } else {
            &self.d
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "({}) + ({})*sqrt({})", self.u, self.v, self.d)
        }
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        self.check(o);
        QuadExt::new(&self.u + &o.u, &self.v + &o.v, self.radicand(o).clone())
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        self.check(o);
        QuadExt::new(&self.u - &o.u, &self.v - &o.v, self.radicand(o).clone())
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        self.check(o);
        let d = self.radicand(o);
        let u = &(&self.u * &o.u) + &(&(&self.v * &o.v) * d);
        let v = &(&self.u * &o.v) + &(&self.v * &o.u);
        QuadExt::new(u, v, d.clone())
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.u, -&self.v, self.d.clone())
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        &self + &o
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        &self - &o
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        &self * &o
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    #[test]
    fn eigenvalue_of_q() {
        // λ = (τ + √(τ² − 4))/2 with τ = 3 + 2√2
        let tau = QuarticElem::from_ints([3, 0, 2, 0]);
        let d = &(&tau * &tau) - &QuarticElem::from_int(4);
        assert_eq!(d, QuarticElem::from_ints([13, 0, 12, 0]));
        let half = QuarticElem::from_rational(ratio(1, 2));
        let lam = QuadExt::new(&tau * &half, half.clone(), d.clone());
        let inv = lam.inv().unwrap();
        let sum = &lam + &inv;
        assert_eq!(sum.as_base(), Some(tau));
        assert_eq!(lam.sign(), Sign::Positive);
        assert_eq!(
            (&lam - &QuadExt::from_base(QuarticElem::one(), &d)).sign(),
            Sign::Positive
        );
        assert_eq!(
            (&inv - &QuadExt::from_base(QuarticElem::one(), &d)).sign(),
            Sign::Negative
        );
    }

    #[test]
    fn values_across_radicands() {
        let i = QuarticElem::from_int;
        // √8 = 2√2, 1 + √8 ≠ 1 + √2, −√8 ≠ 2√2
        let a = QuadExt::new(i(1), i(1), i(8));
        let b = QuadExt::new(i(1), i(2), i(2));
        assert!(a.value_eq(&b));
        assert!(!a.value_eq(&QuadExt::new(i(1), i(1), i(2))));
        assert!(!QuadExt::new(i(0), i(-1), i(8)).value_eq(&QuadExt::new(i(0), i(2), i(2))));
        // √3 + √2 is not in Q[β][√2]
        assert!(!QuadExt::new(i(0), i(1), i(3)).value_eq(&QuadExt::new(i(0), i(1), i(2))));
    }
}
