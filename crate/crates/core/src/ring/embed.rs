use super::{Interval, QuadRat, QuarticElem, Sign};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex number `re + im·i` whose real and imaginary parts are real
/// numbers of `Q[β]`.
///
/// Images of `Q[β]` under `σ₁`/`σ₃` have `re ∈ Q[√2]` and `im ∈ β·Q[√2]`
/// (see [`re_quad`](Self::re_quad) and [`im_scale`](Self::im_scale)); the
/// images under `σ₀`/`σ₂` are real. Keeping both parts in `Q[β]` lets the
/// type hold all four embeddings and stay closed under arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddedComplex {
    pub re: QuarticElem,
    pub im: QuarticElem,
}

/// Image of `x` under `σ_k: β ↦ β·i^k`.
pub fn galois(x: &QuarticElem, k: usize) -> EmbeddedComplex {
    let [a, m, p, e] = x.coeffs();
    let zero = || super::Rational::from_integer(0.into());
    match k % 4 {
        0 => EmbeddedComplex::real(x.clone()),
        2 => EmbeddedComplex::real(x.sigma2()),
        k => {
            // β ↦ βi sends β² ↦ −β², β³ ↦ −β³·i
            let re = QuarticElem::from_rationals([a, zero(), -p, zero()]);
            let im = QuarticElem::from_rationals([zero(), m, zero(), -e]);
            let z = EmbeddedComplex { re, im };
            if k == 1 {
                z
            } else {
                z.conj()
            }
        }
    }
}

impl EmbeddedComplex {
    pub fn new(re: QuarticElem, im: QuarticElem) -> Self {
        EmbeddedComplex { re, im }
    }

    pub fn real(re: QuarticElem) -> Self {
        EmbeddedComplex {
            re,
            im: QuarticElem::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(QuarticElem::zero())
    }

    pub fn one() -> Self {
        Self::real(QuarticElem::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        EmbeddedComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|² = re² + im²`, exact.
    pub fn norm_sq(&self) -> QuarticElem {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq().inv()?;
        Ok(EmbeddedComplex {
            re: &self.re * &n,
            im: -(&self.im * &n),
        })
    }

    /// Real part as an element of `Q[√2]`, when it lies there.
    pub fn re_quad(&self) -> Option<QuadRat> {
        self.re.as_quad()
    }

    /// The scalar `s ∈ Q[√2]` with `im = β·s`, when it exists.
    pub fn im_scale(&self) -> Option<QuadRat> {
        let [a, m, p, e] = self.im.coeffs();
        use num_traits::Zero;
        if !a.is_zero() || !p.is_zero() {
            return None;
        }
        // β·(u + v√2) = uβ + vβ³
        Some(QuadRat::new(m, e))
    }

    /// Sign of the real part when the number is real.
    pub fn real_sign(&self) -> Option<Sign> {
        self.is_real().then(|| self.re.sign())
    }

    pub fn re_interval(&self, prec: u32) -> Interval {
        Interval::of_quartic(&self.re, prec)
    }

    pub fn im_interval(&self, prec: u32) -> Interval {
        Interval::of_quartic(&self.im, prec)
    }

    /// Enclosure of `|z|`.
    pub fn abs_interval(&self, prec: u32) -> Interval {
        Interval::of_quartic(&self.norm_sq(), prec).sqrt(prec)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for EmbeddedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({}) + ({})i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a EmbeddedComplex> for &'a EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn add(self, o: &EmbeddedComplex) -> EmbeddedComplex {
        EmbeddedComplex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a EmbeddedComplex> for &'a EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn sub(self, o: &EmbeddedComplex) -> EmbeddedComplex {
        EmbeddedComplex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a EmbeddedComplex> for &'a EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn mul(self, o: &EmbeddedComplex) -> EmbeddedComplex {
        if self.is_real() && o.is_real() {
            return EmbeddedComplex::real(&self.re * &o.re);
        }
        EmbeddedComplex::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

impl Neg for &EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn neg(self) -> EmbeddedComplex {
        EmbeddedComplex::new(-&self.re, -&self.im)
    }
}

impl Add for EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn add(self, o: EmbeddedComplex) -> EmbeddedComplex {
        &self + &o
    }
}

impl Sub for EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn sub(self, o: EmbeddedComplex) -> EmbeddedComplex {
        &self - &o
    }
}

impl Mul for EmbeddedComplex {
    type Output = EmbeddedComplex;
    fn mul(self, o: EmbeddedComplex) -> EmbeddedComplex {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_of_q_under_sigma1() {
        let z = galois(&QuarticElem::from_ints([3, 0, 2, 0]), 1);
        assert!(z.is_real());
        assert_eq!(z.re_quad(), Some(QuadRat::from_ints(3, -2)));
    }

    #[test]
    fn trace_of_p_under_sigma1() {
        let z = galois(&QuarticElem::from_ints([5, -3, 1, -2]), 1);
        assert_eq!(z.re_quad(), Some(QuadRat::from_ints(5, -1)));
        // −β(3 − 2√2)
        assert_eq!(z.im_scale(), Some(QuadRat::from_ints(-3, 2)));
        assert_eq!(galois(&QuarticElem::from_ints([5, -3, 1, -2]), 3), z.conj());
    }

    #[test]
    fn identity_embedding() {
        let x = QuarticElem::from_ints([1, 2, 3, 4]);
        assert_eq!(galois(&x, 0), EmbeddedComplex::real(x.clone()));
        assert_eq!(galois(&x, 2).re, QuarticElem::from_ints([1, -2, 3, -4]));
    }

    #[test]
    fn sigma1_of_beta_squared_is_i_squared() {
        let b = galois(&QuarticElem::beta(), 1);
        let b2 = galois(&QuarticElem::from_ints([0, 0, 1, 0]), 1);
        assert_eq!(&b * &b, b2);
        assert_eq!(b2.re, QuarticElem::from_ints([0, 0, -1, 0]));
    }
}
