use super::{fmt_rational, parse_rational, sign_of_surd, sign_z_sqrt2, QuadRat, Rational, Sign};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An element `q0 + q1·β + q2·β² + q3·β³` of `Q[β]`, `β⁴ = 2`.
///
/// Stored as four integer numerators over one positive common denominator,
/// in lowest terms. Integral elements (denominator 1) therefore never touch a
/// gcd during multiplication, which keeps word evaluation cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuarticElem {
    num: [BigInt; 4],
    den: BigInt,
}

impl QuarticElem {
    fn from_parts(num: [BigInt; 4], den: BigInt) -> Self {
        let mut x = QuarticElem { num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for n in &mut self.num {
                *n = -std::mem::take(n);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(n);
        }
        if !g.is_one() {
            for n in &mut self.num {
                *n /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero() -> Self {
        QuarticElem {
            num: Default::default(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn beta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        QuarticElem {
            num: c.map(BigInt::from),
            den: BigInt::one(),
        }
    }

    pub fn from_bigints(c: [BigInt; 4]) -> Self {
        QuarticElem {
            num: c,
            den: BigInt::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ints([n, 0, 0, 0])
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_rationals([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn from_rationals(c: [Rational; 4]) -> Self {
        let den = c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let num = c.map(|r| r.numer() * (&den / r.denom()));
        Self::from_parts(num, den)
    }

    /// `c·β^k` for `k` in `0..4`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs: [Rational; 4] = Default::default();
        coeffs[k] = c;
        Self::from_rationals(coeffs)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> [Rational; 4] {
        [self.coeff(0), self.coeff(1), self.coeff(2), self.coeff(3)]
    }

    pub fn numerators(&self) -> &[BigInt; 4] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q[√2] = Q[β²]`.
    pub fn is_even(&self) -> bool {
        self.num[1].is_zero() && self.num[3].is_zero()
    }

    /// Even part `q0 + q2β²` and odd part `q1β + q3β³`.
    pub fn split_parity(&self) -> (QuarticElem, QuarticElem) {
        let z = BigInt::zero;
        let even = Self::from_parts(
            [self.num[0].clone(), z(), self.num[2].clone(), z()],
            self.den.clone(),
        );
        let odd = Self::from_parts(
            [z(), self.num[1].clone(), z(), self.num[3].clone()],
            self.den.clone(),
        );
        (even, odd)
    }

    /// The even-only element as `u + v√2`.
    pub fn as_quad(&self) -> Option<QuadRat> {
        self.is_even()
            .then(|| QuadRat::new(self.coeff(0), self.coeff(2)))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(0))
    }

    /// Image under the real automorphism `β ↦ −β`.
    pub fn sigma2(&self) -> Self {
        QuarticElem {
            num: [
                self.num[0].clone(),
                -self.num[1].clone(),
                self.num[2].clone(),
                -self.num[3].clone(),
            ],
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.clone().map(|n| n * r.numer());
        Self::from_parts(num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::from_parts(self.num.clone().map(|n| n * &k), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x·σ₂(x) lies in Q[√2]; finish with the norm of Q[√2]/Q.
        let s2 = self.sigma2();
        let w = self * &s2;
        let wq = w.as_quad().expect("x·σ₂(x) is even");
        let wc = QuadRat::new(wq.u.clone(), -wq.v.clone());
        let n = wq.norm();
        let adj = &s2 * &wc.to_quartic();
        Ok(adj.scale(&(Rational::one() / n)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact sign of the real number `q0 + q1β + q2β² + q3β³`.
    ///
    /// Writes the element as `E + O·β` with `E, O ∈ Z[√2]` (numerators only;
    /// the denominator is positive) and reduces `sign(E² − √2·O²)` to a sign in
    /// `Z[√2]`.
    pub fn sign(&self) -> Sign {
        let [a, m, p, e] = &self.num;
        let se = sign_z_sqrt2(a, p);
        let so = sign_z_sqrt2(m, e);
        sign_of_surd(se, so, || {
            let two = BigInt::from(2);
            let u = a * a + &two * p * p - BigInt::from(4) * m * e;
            let v = &two * a * p - m * m - &two * e * e;
            sign_z_sqrt2(&u, &v)
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

    /// Floating approximation, for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let b = 2f64.powf(0.25);
        let c: Vec<f64> = self
            .coeffs()
            .iter()
            .map(|r| r.to_f64().unwrap_or(f64::NAN))
            .collect();
        c[0] + b * (c[1] + b * (c[2] + b * c[3]))
    }

    /// Largest bit length among numerators and denominator.
    pub fn bit_size(&self) -> u64 {
        self.num
            .iter()
            .map(|n| n.bits())
            .chain(std::iter::once(self.den.bits()))
            .max()
            .unwrap_or(0)
    }

    /// Parses the four-rational text form `"q0 q1 q2 q3"`; `offset` is added
    /// to reported error positions.
    pub fn parse_at(s: &str, offset: usize) -> Result<Self> {
        let mut coeffs: Vec<Rational> = Vec::with_capacity(4);
        let mut pos = 0;
        for tok in s.split(' ') {
            if !tok.is_empty() {
                let r = parse_rational(tok).ok_or_else(|| Error::Parse {
                    pos: offset + pos,
                    msg: format!("invalid rational '{tok}'"),
                })?;
                coeffs.push(r);
            }
            pos += tok.len() + 1;
        }
        let n = coeffs.len();
        let arr: [Rational; 4] = coeffs.try_into().map_err(|_| Error::Parse {
            pos: offset,
            msg: format!("expected 4 coefficients, found {n}"),
        })?;
        Ok(Self::from_rationals(arr))
    }
}

impl std::str::FromStr for QuarticElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_at(s, 0)
    }
}

impl fmt::Display for QuarticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs();
        write!(
            f,
            "{} {} {} {}",
            fmt_rational(&c[0]),
            fmt_rational(&c[1]),
            fmt_rational(&c[2]),
            fmt_rational(&c[3])
        )
    }
}

impl fmt::Debug for QuarticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{self}]")
    }
}

impl<'a> Add<&'a QuarticElem> for &'a QuarticElem {
    type Output = QuarticElem;
    fn add(self, o: &QuarticElem) -> QuarticElem {
        if self.den == o.den {
            let num = std::array::from_fn(|i| &self.num[i] + &o.num[i]);
            return QuarticElem::from_parts(num, self.den.clone());
        }
        let num = std::array::from_fn(|i| &self.num[i] * &o.den + &o.num[i] * &self.den);
        QuarticElem::from_parts(num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a QuarticElem> for &'a QuarticElem {
    type Output = QuarticElem;
    fn sub(self, o: &QuarticElem) -> QuarticElem {
        if self.den == o.den {
            let num = std::array::from_fn(|i| &self.num[i] - &o.num[i]);
            return QuarticElem::from_parts(num, self.den.clone());
        }
        let num = std::array::from_fn(|i| &self.num[i] * &o.den - &o.num[i] * &self.den);
        QuarticElem::from_parts(num, &self.den * &o.den)
    }
}

impl<'a> Mul<&'a QuarticElem> for &'a QuarticElem {
    type Output = QuarticElem;
    fn mul(self, o: &QuarticElem) -> QuarticElem {
        let a = &self.num;
        let b = &o.num;
        let mut c: [BigInt; 4] = Default::default();
        for i in 0..4 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if b[j].is_zero() {
                    continue;
                }
                let prod = &a[i] * &b[j];
                let k = i + j;
                if k < 4 {
                    c[k] += prod;
                } else {
                    c[k - 4] += prod << 1;
                }
            }
        }
        QuarticElem::from_parts(c, &self.den * &o.den)
    }
}

impl Neg for &QuarticElem {
    type Output = QuarticElem;
    fn neg(self) -> QuarticElem {
        QuarticElem {
            num: self.num.clone().map(|n| -n),
            den: self.den.clone(),
        }
    }
}

impl Add for QuarticElem {
    type Output = QuarticElem;
    fn add(self, o: QuarticElem) -> QuarticElem {
        &self + &o
    }
}

impl Sub for QuarticElem {
    type Output = QuarticElem;
    fn sub(self, o: QuarticElem) -> QuarticElem {
        &self - &o
    }
}

impl Mul for QuarticElem {
    type Output = QuarticElem;
    fn mul(self, o: QuarticElem) -> QuarticElem {
        &self * &o
    }
}

impl Neg for QuarticElem {
    type Output = QuarticElem;
    fn neg(self) -> QuarticElem {
        -&self
    }
}

impl AddAssign<&QuarticElem> for QuarticElem {
    fn add_assign(&mut self, o: &QuarticElem) {
        *self = &*self + o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    fn q(c: [i64; 4]) -> QuarticElem {
        QuarticElem::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(q([1, 1, 0, 0]) * q([1, -1, 0, 0]), q([1, 0, -1, 0]));
    }

    #[test]
    fn inverse_of_beta() {
        let inv = QuarticElem::beta().inv().unwrap();
        assert_eq!(inv, QuarticElem::monomial(ratio(1, 2), 3), "β⁻¹ = β³/2");
        assert_eq!(QuarticElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn trace_conjugate_product_is_one() {
        assert_eq!(q([3, 0, 2, 0]) * q([3, 0, -2, 0]), QuarticElem::one());
    }

    #[test]
    fn reduces_common_denominator() {
        let x = QuarticElem::from_rationals([ratio(1, 2), ratio(1, 4), ratio(0, 1), ratio(3, 2)]);
        assert_eq!(x.denominator(), &BigInt::from(4));
        let y = x.scale_int(4);
        assert!(y.is_integral());
        assert_eq!(y, q([2, 1, 0, 6]));
    }

    #[test]
    fn exact_signs() {
        assert_eq!(QuarticElem::zero().sign(), Sign::Zero);
        assert_eq!(q([-13, 0, 12, 0]).sign(), Sign::Positive);
        assert_eq!(q([5, -3, 1, -2]).sign(), Sign::Negative);
        assert_eq!(q([0, 1, 0, 0]).sign(), Sign::Positive);
        // 1 − β + ... close to zero cases
        assert_eq!(q([1, -1, 0, 0]).sign(), Sign::Negative);
        assert_eq!(q([-2, 0, 0, 1]).sign(), Sign::Negative); // β³ ≈ 1.68
    }

    #[test]
    fn parse_and_display() {
        let x: QuarticElem = "5 -3 1 -2".parse().unwrap();
        assert_eq!(x, q([5, -3, 1, -2]));
        assert_eq!(x.to_string(), "5 -3 1 -2");
        let y: QuarticElem = "0 0 0 1/3".parse().unwrap();
        assert_eq!(y.to_string(), "0 0 0 1/3");
        match "1 2 x 3".parse::<QuarticElem>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1 2 3".parse::<QuarticElem>().is_err());
    }
}
