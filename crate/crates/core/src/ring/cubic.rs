use super::interval::{root2_enclosure, sign_by_refinement};
use super::{fmt_rational, Interval, Rational, Sign};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + m·γ + p·γ²` in `Q[γ]`, `γ = 2^(1/3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicElem {
    pub c: [Rational; 3],
}

impl CubicElem {
    pub fn new(a: Rational, m: Rational, p: Rational) -> Self {
        CubicElem { c: [a, m, p] }
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        CubicElem {
            c: c.map(super::rat),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints([0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `a³ + 2m³ + 4p³ − 6amp`, the norm to `Q`.
    pub fn norm(&self) -> Rational {
        let [a, m, p] = &self.c;
        let k = |n: i64| Rational::from_integer(n.into());
        a * a * a + k(2) * m * m * m + k(4) * p * p * p - k(6) * a * m * p
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let [a, m, p] = &self.c;
        let two = Rational::from_integer(2.into());
        Ok(CubicElem::new(
            (a * a - &two * m * p) / &n,
            (&two * p * p - a * m) / &n,
            (m * m - a * p) / &n,
        ))
    }

    pub fn interval(&self, prec: u32) -> Interval {
        let g = root2_enclosure(3, prec);
        let g2 = &g * &g;
        let mut acc = Interval::point(self.c[0].clone());
        acc = &acc + &g.scale(&self.c[1]);
        &acc + &g2.scale(&self.c[2])
    }

    /// Exact sign, by refining an enclosure of `γ` once zero is excluded
    /// symbolically.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        sign_by_refinement(64, u32::MAX / 8, |p| self.interval(p))
            .expect("nonzero element has a sign")
    }
}

impl fmt::Display for CubicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, m, p] = &self.c;
        write!(
            f,
            "{} {} {}",
            fmt_rational(a),
            fmt_rational(m),
            fmt_rational(p)
        )
    }
}

impl<'a> Add<&'a CubicElem> for &'a CubicElem {
    type Output = CubicElem;
    fn add(self, o: &CubicElem) -> CubicElem {
        CubicElem {
            c: std::array::from_fn(|i| &self.c[i] + &o.c[i]),
        }
    }
}

impl<'a> Sub<&'a CubicElem> for &'a CubicElem {
    type Output = CubicElem;
    fn sub(self, o: &CubicElem) -> CubicElem {
        CubicElem {
            c: std::array::from_fn(|i| &self.c[i] - &o.c[i]),
        }
    }
}

impl<'a> Mul<&'a CubicElem> for &'a CubicElem {
    type Output = CubicElem;
    fn mul(self, o: &CubicElem) -> CubicElem {
        let mut c: [Rational; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let prod = &self.c[i] * &o.c[j];
                let k = i + j;
                if k < 3 {
                    c[k] += prod;
                } else {
                    c[k - 3] += prod * Rational::from_integer(2.into());
                }
            }
        }
        CubicElem { c }
    }
}

impl Neg for &CubicElem {
    type Output = CubicElem;
    fn neg(self) -> CubicElem {
        CubicElem {
            c: self.c.clone().map(|x| -x),
        }
    }
}

impl Add for CubicElem {
    type Output = CubicElem;
    fn add(self, o: CubicElem) -> CubicElem {
        &self + &o
    }
}

impl Sub for CubicElem {
    type Output = CubicElem;
    fn sub(self, o: CubicElem) -> CubicElem {
        &self - &o
    }
}

impl Mul for CubicElem {
    type Output = CubicElem;
    fn mul(self, o: CubicElem) -> CubicElem {
        &self * &o
    }
}

impl Default for CubicElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl CubicElem {
    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    #[test]
    fn gamma_cubed_is_two() {
        let g = CubicElem::from_ints([0, 1, 0]);
        assert_eq!(&(&g * &g) * &g, CubicElem::from_ints([2, 0, 0]));
        assert_eq!(
            g.inv().unwrap(),
            CubicElem::new(rat(0), rat(0), ratio(1, 2))
        );
    }

    #[test]
    fn inverse_round_trip() {
        let x = CubicElem::from_ints([3, -1, 2]);
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn signs() {
        assert_eq!(CubicElem::from_ints([-1, 1, 0]).sign(), Sign::Positive);
        assert_eq!(CubicElem::from_ints([-2, 0, 1]).sign(), Sign::Negative);
        assert_eq!(CubicElem::from_ints([0, 0, 0]).sign(), Sign::Zero);
        assert_eq!(CubicElem::from_ints([1, 1, 1]).sign(), Sign::Positive);
    }
}
