use super::RingMat2;
use crate::error::{Error, Result};
use crate::ring::{CubicElem, QuarticElem, Rational};
use num_traits::{One, Zero};
use std::fmt;

/// Dense square matrix over `Q`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub n: usize,
    pub data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant by fraction-valued Gaussian elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut m = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                for j in 0..n {
                    m.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let p = m[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &m[r * n + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &f * &m[col * n + j];
                    m[r * n + j] -= v;
                }
            }
        }
        det
    }

    /// Coefficients `[c_0, …, c_n]` of `det(xI − M)`, lowest degree first,
    /// by the Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> Vec<Rational> {
        let n = self.n;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut mk = RatMatrix::zeros(n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
            let mut next = self.mul(&mk);
            for i in 0..n {
                next.data[i * n + i] += &coeffs[n - k + 1];
            }
            let am = self.mul(&next);
            coeffs[n - k] = -am.trace() / Rational::from_integer((k as i64).into());
            mk = next;
        }
        coeffs
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(crate::ring::fmt_rational).collect())
            .collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows_as_strings() {
            writeln!(f, "{}", r.join(" "))?;
        }
        Ok(())
    }
}

/// The `2κ × 2κ` rational image of a 2×2 matrix over `Q[2^(1/κ)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularRep {
    pub kappa: u32,
    pub m: RatMatrix,
}

/// Multiplication-by-`x` matrix on the basis `1, γ, …, γ^(κ−1)` with
/// `γ^κ = 2`: column `j` holds the coefficients of `x·γ^j`.
fn mult_block(c: &[Rational]) -> Vec<Vec<Rational>> {
    let k = c.len();
    let two = Rational::from_integer(2.into());
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i >= j {
                        c[i - j].clone()
                    } else {
                        &two * &c[k + i - j]
                    }
                })
                .collect()
        })
        .collect()
}

fn assemble(kappa: u32, blocks: [Vec<Vec<Rational>>; 4]) -> RegularRep {
    let k = kappa as usize;
    let mut m = RatMatrix::zeros(2 * k);
    for (bi, block) in blocks.iter().enumerate() {
        let (r0, c0) = ((bi / 2) * k, (bi % 2) * k);
        for i in 0..k {
            for j in 0..k {
                m.set(r0 + i, c0 + j, block[i][j].clone());
            }
        }
    }
    RegularRep { kappa, m }
}

/// Coefficients of `x` over `Q[2^(1/κ)] ⊂ Q[β]`: for κ = 2 the pair
/// `(q0, q2)`, for κ = 4 all four.
fn sub_coeffs(x: &QuarticElem, kappa: u32) -> Result<Vec<Rational>> {
    let c = x.coeffs();
    match kappa {
        4 => Ok(c.to_vec()),
        2 if x.is_even() => Ok(vec![c[0].clone(), c[2].clone()]),
        3 if x.is_rational() => Ok(vec![c[0].clone(), Rational::zero(), Rational::zero()]),
        2 | 3 => Err(Error::WrongSubring(kappa)),
        _ => Err(Error::InvalidArgument(format!(
            "kappa must be 2, 3 or 4, got {kappa}"
        ))),
    }
}

/// `Φ_κ(A)`. For κ = 2 the entries must lie in `Q[√2]`; for κ = 3 a
/// `RingMat2` only carries rational entries (use [`regular_rep_cubic`] for
/// general `Q[2^(1/3)]` matrices).
pub fn regular_rep(a: &RingMat2, kappa: u32) -> Result<RegularRep> {
    let blocks = [
        mult_block(&sub_coeffs(&a.e11, kappa)?),
        mult_block(&sub_coeffs(&a.e12, kappa)?),
        mult_block(&sub_coeffs(&a.e21, kappa)?),
        mult_block(&sub_coeffs(&a.e22, kappa)?),
    ];
    Ok(assemble(kappa, blocks))
}

/// 2×2 matrix over `Q[2^(1/3)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicMat2 {
    pub e: [CubicElem; 4],
}

impl CubicMat2 {
    pub fn identity() -> Self {
        CubicMat2 {
            e: [
                CubicElem::one(),
                CubicElem::zero(),
                CubicElem::zero(),
                CubicElem::one(),
            ],
        }
    }

    pub fn mat_mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        CubicMat2 {
            e: [
                &(a * p) + &(b * r),
                &(a * q) + &(b * s),
                &(c * p) + &(d * r),
                &(c * q) + &(d * s),
            ],
        }
    }

    pub fn det(&self) -> CubicElem {
        &(&self.e[0] * &self.e[3]) - &(&self.e[1] * &self.e[2])
    }
}

/// `Φ₃(A)` for a matrix over `Q[2^(1/3)]`.
pub fn regular_rep_cubic(a: &CubicMat2) -> RegularRep {
    let blocks = a.e.clone().map(|x| mult_block(&x.c));
    assemble(3, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn phi2_matches_display_shape() {
        // [[a + m√2, b + n√2], [c + k√2, d + l√2]] ↦ [[a,2m,b,2n],[m,a,n,b],…]
        let a: RingMat2 = "1 0 2 0; 3 0 4 0; 5 0 6 0; 7 0 8 0".parse().unwrap();
        let r = regular_rep(&a, 2).unwrap();
        let row = |i| r.m.row(i).to_vec();
        assert_eq!(row(0), vec![rat(1), rat(4), rat(3), rat(8)]);
        assert_eq!(row(1), vec![rat(2), rat(1), rat(4), rat(3)]);
        assert_eq!(row(3), vec![rat(6), rat(5), rat(8), rat(7)]);
        let odd: RingMat2 = "1 1 0 0; 0 0 0 0; 0 0 0 0; 1 0 0 0".parse().unwrap();
        assert_eq!(regular_rep(&odd, 2), Err(Error::WrongSubring(2)));
    }

    #[test]
    fn phi3_rows() {
        let a = CubicMat2 {
            e: [
                CubicElem::from_ints([1, 2, 3]),
                CubicElem::from_ints([4, 5, 6]),
                CubicElem::from_ints([7, 8, 9]),
                CubicElem::from_ints([10, 11, 12]),
            ],
        };
        let r = regular_rep_cubic(&a);
        // (a, 2p, 2m, b, 2q, 2n)
        assert_eq!(r.m.row(0).to_vec(), [1, 6, 4, 4, 12, 10].map(rat).to_vec());
        assert_eq!(r.m.row(5).to_vec(), [9, 8, 7, 12, 11, 10].map(rat).to_vec());
    }

    #[test]
    fn det_and_charpoly() {
        let mut m = RatMatrix::zeros(2);
        m.data = vec![rat(2), rat(1), rat(1), rat(1)];
        assert_eq!(m.det(), rat(1));
        assert_eq!(m.charpoly(), vec![rat(1), rat(-3), rat(1)]);
        assert_eq!(RatMatrix::identity(8).det(), rat(1));
    }
}
