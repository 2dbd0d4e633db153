use crate::error::{Error, Result};
use crate::ring::{galois, EmbeddedComplex, QuarticElem};
use std::fmt;
use std::ops::Mul;

/// 2×2 matrix over `Q[β]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMat2 {
    pub e11: QuarticElem,
    pub e12: QuarticElem,
    pub e21: QuarticElem,
    pub e22: QuarticElem,
}

impl RingMat2 {
    pub fn new(e11: QuarticElem, e12: QuarticElem, e21: QuarticElem, e22: QuarticElem) -> Self {
        RingMat2 { e11, e12, e21, e22 }
    }

    pub fn from_entries(e: [QuarticElem; 4]) -> Self {
        let [a, b, c, d] = e;
        RingMat2::new(a, b, c, d)
    }

    pub fn entries(&self) -> [&QuarticElem; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    /// Rational integer matrix.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        RingMat2::new(
            QuarticElem::from_int(a),
            QuarticElem::from_int(b),
            QuarticElem::from_int(c),
            QuarticElem::from_int(d),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn scalar(x: QuarticElem) -> Self {
        RingMat2::new(x.clone(), QuarticElem::zero(), QuarticElem::zero(), x)
    }

    pub fn det(&self) -> QuarticElem {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }

    pub fn trace(&self) -> QuarticElem {
        &self.e11 + &self.e22
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    pub fn is_identity(&self) -> bool {
        self.e11.is_one() && self.e22.is_one() && self.e12.is_zero() && self.e21.is_zero()
    }

    pub fn is_neg_identity(&self) -> bool {
        self.e12.is_zero() && self.e21.is_zero() && (-&self.e11).is_one() && (-&self.e22).is_one()
    }

    pub fn is_scalar(&self) -> bool {
        self.e12.is_zero() && self.e21.is_zero() && self.e11 == self.e22
    }

    pub fn is_integral(&self) -> bool {
        self.entries().iter().all(|x| x.is_integral())
    }

    pub fn mat_mul(&self, o: &Self) -> Self {
        RingMat2::new(
            &(&self.e11 * &o.e11) + &(&self.e12 * &o.e21),
            &(&self.e11 * &o.e12) + &(&self.e12 * &o.e22),
            &(&self.e21 * &o.e11) + &(&self.e22 * &o.e21),
            &(&self.e21 * &o.e12) + &(&self.e22 * &o.e22),
        )
    }

    pub fn adjugate(&self) -> Self {
        RingMat2::new(self.e22.clone(), -&self.e12, -&self.e21, self.e11.clone())
    }

    pub fn mat_inv(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let adj = self.adjugate();
        if d.is_one() {
            return Ok(adj);
        }
        let di = d.inv()?;
        Ok(adj.scale(&di))
    }

    pub fn scale(&self, c: &QuarticElem) -> Self {
        RingMat2::new(&self.e11 * c, &self.e12 * c, &self.e21 * c, &self.e22 * c)
    }

    /// `A^n` by binary exponentiation; negative `n` inverts first.
    pub fn mat_pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.mat_inv()? } else { self.clone() };
        Ok(base.pow_u(n.unsigned_abs()))
    }

    pub fn pow_u(&self, mut e: u64) -> Self {
        let mut acc = RingMat2::identity();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mat_mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mat_mul(&b);
            }
        }
        acc
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        Ok(a.mat_mul(b).mat_mul(&a.mat_inv()?).mat_mul(&b.mat_inv()?))
    }

    pub fn map(&self, f: impl Fn(&QuarticElem) -> QuarticElem) -> Self {
        RingMat2::new(f(&self.e11), f(&self.e12), f(&self.e21), f(&self.e22))
    }

    /// Entrywise `β ↦ −β`; as a real matrix this is the `σ₂` view.
    pub fn sigma2(&self) -> Self {
        self.map(QuarticElem::sigma2)
    }

    /// The real matrix seen through a real embedding (`k ∈ {0, 2}`).
    pub fn real_view(&self, k: usize) -> Result<Self> {
        match k {
            0 => Ok(self.clone()),
            2 => Ok(self.sigma2()),
            1 | 3 => Err(Error::InvalidArgument(format!("embedding {k} is not real"))),
            _ => Err(Error::BadEmbedding(k)),
        }
    }

    pub fn embed(&self, k: usize) -> Result<EmbeddedMat2> {
        if k > 3 {
            return Err(Error::BadEmbedding(k));
        }
        Ok(EmbeddedMat2 {
            k,
            e: [
                galois(&self.e11, k),
                galois(&self.e12, k),
                galois(&self.e21, k),
                galois(&self.e22, k),
            ],
        })
    }

    /// Largest bit size among entries.
    pub fn bit_size(&self) -> u64 {
        self.entries()
            .iter()
            .map(|x| x.bit_size())
            .max()
            .unwrap_or(0)
    }

    /// Parses `"e11; e12; e21; e22"` with each entry in the four-rational
    /// form.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 4 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected 4 entries separated by ';', found {}", parts.len()),
            });
        }
        let mut offset = 0;
        let mut out = Vec::with_capacity(4);
        for p in parts {
            out.push(QuarticElem::parse_at(p, offset)?);
            offset += p.len() + 1;
        }
        Ok(RingMat2::from_entries(
            out.try_into().expect("four entries"),
        ))
    }

    /// JSON form: four arrays of four rational strings.
    pub fn to_json(&self) -> Vec<Vec<String>> {
        self.entries()
            .iter()
            .map(|x| x.coeffs().iter().map(crate::ring::fmt_rational).collect())
            .collect()
    }

    pub fn from_json(v: &[Vec<String>]) -> Result<Self> {
        if v.len() != 4 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected 4 entries, found {}", v.len()),
            });
        }
        let mut out = Vec::with_capacity(4);
        for (i, row) in v.iter().enumerate() {
            out.push(QuarticElem::parse_at(&row.join(" "), i)?);
        }
        Ok(RingMat2::from_entries(
            out.try_into().expect("four entries"),
        ))
    }
}

impl std::str::FromStr for RingMat2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RingMat2::parse(s)
    }
}

impl fmt::Display for RingMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}; {}; {}", self.e11, self.e12, self.e21, self.e22)
    }
}

impl fmt::Debug for RingMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl<'a> Mul<&'a RingMat2> for &'a RingMat2 {
    type Output = RingMat2;
    fn mul(self, o: &RingMat2) -> RingMat2 {
        self.mat_mul(o)
    }
}

/// Entrywise image of a [`RingMat2`] under `σ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedMat2 {
    pub k: usize,
    pub e: [EmbeddedComplex; 4],
}

impl EmbeddedMat2 {
    pub fn identity(k: usize) -> Self {
        EmbeddedMat2 {
            k,
            e: [
                EmbeddedComplex::one(),
                EmbeddedComplex::zero(),
                EmbeddedComplex::zero(),
                EmbeddedComplex::one(),
            ],
        }
    }

    pub fn trace(&self) -> EmbeddedComplex {
        &self.e[0] + &self.e[3]
    }

    pub fn det(&self) -> EmbeddedComplex {
        &(&self.e[0] * &self.e[3]) - &(&self.e[1] * &self.e[2])
    }

    pub fn mat_mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        EmbeddedMat2 {
            k: self.k,
            e: [
                &(a * p) + &(b * r),
                &(a * q) + &(b * s),
                &(c * p) + &(d * r),
                &(c * q) + &(d * s),
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == EmbeddedMat2::identity(self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RingMat2 {
        "3 0 2 0; 1 0 0 0; -1 0 0 0; 0 0 0 0".parse().unwrap()
    }

    #[test]
    fn square_of_q() {
        let t = QuarticElem::from_ints([3, 0, 2, 0]);
        let expect = RingMat2::new(
            &(&t * &t) - &QuarticElem::one(),
            t.clone(),
            -&t,
            QuarticElem::from_int(-1),
        );
        assert_eq!(q().mat_pow(2).unwrap(), expect);
    }

    #[test]
    fn inverse_and_powers() {
        assert!(q().mat_mul(&q().mat_inv().unwrap()).is_identity());
        assert!(q().mat_pow(0).unwrap().is_identity());
        let p5 = q().mat_pow(5).unwrap();
        assert_eq!(q().mat_pow(-5).unwrap(), p5.mat_inv().unwrap());
        assert_eq!(
            RingMat2::from_ints(1, 2, 2, 4).mat_inv(),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        match "1 0 0 0; 0 0 0 0; 0 0 z 0; 1 0 0 0".parse::<RingMat2>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 22),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1 0 0 0; 0 0 0 0".parse::<RingMat2>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = q();
        assert_eq!(RingMat2::from_json(&m.to_json()).unwrap(), m);
    }
}
