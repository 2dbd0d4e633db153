use super::{class_of_real_trace, MatClass, RingMat2};
use crate::error::{Error, Result};
use crate::ring::{galois, EmbeddedComplex, Interval, QuadExt, QuarticElem, Rational};

/// Eigen-data of a 2×2 unimodular matrix under one embedding.
#[derive(Debug, Clone)]
pub enum Eigen2 {
    /// Real trace with `t² > 4`: eigenvalues `λ, λ⁻¹` with `|λ| > 1`.
    Hyperbolic(RealEigen),
    /// Real trace with `t² < 4`: a conjugate pair on the unit circle,
    /// `cos θ = t/2`.
    Elliptic {
        trace: QuarticElem,
        half_trace: Interval,
    },
    /// Non-real trace (complex embedding).
    Loxodromic { trace: EmbeddedComplex },
}

#[derive(Debug, Clone)]
pub struct RealEigen {
    pub trace: QuarticElem,
    /// `λ` with `|λ| > 1`, in `Q[β][√(t² − 4)]`.
    pub lambda: QuadExt,
    pub lambda_inv: QuadExt,
    pub lambda_interval: Interval,
    pub lambda_inv_interval: Interval,
    /// Eigenvector of `λ` (attracting direction) as `[x : y]`.
    pub attracting: [QuadExt; 2],
    /// Eigenvector of `λ⁻¹` (repelling direction).
    pub repelling: [QuadExt; 2],
}

impl RealEigen {
    /// Slope `y/x` of the attracting eigenvector, when finite.
    pub fn attracting_slope(&self) -> Option<QuadExt> {
        slope(&self.attracting)
    }

    pub fn repelling_slope(&self) -> Option<QuadExt> {
        slope(&self.repelling)
    }
}

fn slope(v: &[QuadExt; 2]) -> Option<QuadExt> {
    if v[0].is_zero() {
        return None;
    }
    Some(&v[1] * &v[0].inv().ok()?)
}

/// An eigenvector `[x : y]` of the real matrix `m` for the eigenvalue `lam`.
pub fn eigenvector(m: &RingMat2, lam: &QuadExt) -> [QuadExt; 2] {
    let d = &lam.d;
    let base = |x: &QuarticElem| QuadExt::from_base(x.clone(), d);
    if !m.e12.is_zero() {
        // (a − λ)x + b·y = 0
        [base(&m.e12), lam - &base(&m.e11)]
    } else if !m.e21.is_zero() {
        // c·x + (d − λ)y = 0
        [lam - &base(&m.e22), base(&m.e21)]
    } else if (lam - &base(&m.e11)).is_zero() {
        [base(&QuarticElem::one()), base(&QuarticElem::zero())]
    } else {
        [base(&QuarticElem::zero()), base(&QuarticElem::one())]
    }
}

/// Eigen-data of a real unimodular matrix given directly.
pub fn real_eigen(m: &RingMat2, prec: u32) -> Result<Eigen2> {
    let t = m.trace();
    match class_of_real_trace(&t) {
        MatClass::Parabolic => Err(Error::ParabolicNotSupported),
        MatClass::Elliptic => {
            let half = Interval::of_quartic(&t, prec).scale(&Rational::new(1.into(), 2.into()));
            Ok(Eigen2::Elliptic {
                trace: t,
                half_trace: half,
            })
        }
        _ => {
            let disc = &(&t * &t) - &QuarticElem::from_int(4);
            let half = QuarticElem::from_rational(Rational::new(1.into(), 2.into()));
            let mid = &t * &half;
            // pick the root with |λ| > 1: same sign as the trace
            let sv = if t.sign().is_negative() {
                -&half
            } else {
                half.clone()
            };
            let lambda = QuadExt::new(mid.clone(), sv.clone(), disc.clone());
            let lambda_inv = QuadExt::new(mid, -&sv, disc);
            let attracting = eigenvector(m, &lambda);
            let repelling = eigenvector(m, &lambda_inv);
            Ok(Eigen2::Hyperbolic(RealEigen {
                trace: t,
                lambda_interval: lambda.interval(prec),
                lambda_inv_interval: lambda_inv.interval(prec),
                lambda,
                lambda_inv,
                attracting,
                repelling,
            }))
        }
    }
}

/// Eigen-data of `σ_k(A)`.
pub fn eigen2(a: &RingMat2, k: usize) -> Result<Eigen2> {
    if k > 3 {
        return Err(Error::BadEmbedding(k));
    }
    if !a.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    if k == 1 || k == 3 {
        let trace = galois(&a.trace(), k);
        if trace.is_real() {
            // real trace under a complex embedding: classify by the trace
            return match class_of_real_trace(&trace.re) {
                MatClass::Parabolic => Err(Error::ParabolicNotSupported),
                MatClass::Elliptic => Ok(Eigen2::Elliptic {
                    half_trace: Interval::of_quartic(&trace.re, 64)
                        .scale(&Rational::new(1.into(), 2.into())),
                    trace: trace.re,
                }),
                _ => Ok(Eigen2::Loxodromic { trace }),
            };
        }
        return Ok(Eigen2::Loxodromic { trace });
    }
    real_eigen(&a.real_view(k)?, 64)
}

/// Resultant of the fixed-point forms `c·X² + (d − a)·XY − b·Y²`.
fn fixed_form(m: &[EmbeddedComplex; 4]) -> [EmbeddedComplex; 3] {
    let [a, b, c, d] = m;
    [c.clone(), d - a, -b]
}

fn resultant(f: &[EmbeddedComplex; 3], g: &[EmbeddedComplex; 3]) -> EmbeddedComplex {
    let (f2, f1, f0) = (&f[0], &f[1], &f[2]);
    let (g2, g1, g0) = (&g[0], &g[1], &g[2]);
    let x = &(f2 * g0) - &(f0 * g2);
    let y = &(f2 * g1) - &(f1 * g2);
    let z = &(f1 * g0) - &(f0 * g1);
    &(&x * &x) - &(&y * &z)
}

/// Resultant of the fixed-point quadratics of `σ_k(A)` and `σ_k(B)`; zero iff
/// they share an eigenvector.
pub fn eigen_resultant(a: &RingMat2, b: &RingMat2, k: usize) -> Result<EmbeddedComplex> {
    let ea = a.embed(k)?;
    let eb = b.embed(k)?;
    let fa = fixed_form(&ea.e);
    let fb = fixed_form(&eb.e);
    if fa.iter().all(EmbeddedComplex::is_zero) || fb.iter().all(EmbeddedComplex::is_zero) {
        return Err(Error::ScalarMatrix);
    }
    Ok(resultant(&fa, &fb))
}

/// True iff `σ_k(A)` and `σ_k(B)` have a common eigenvector.
pub fn share_eigenvector(a: &RingMat2, b: &RingMat2, k: usize) -> Result<bool> {
    Ok(eigen_resultant(a, b, k)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Sign;

    fn q() -> RingMat2 {
        "3 0 2 0; 1 0 0 0; -1 0 0 0; 0 0 0 0".parse().unwrap()
    }

    #[test]
    fn q_eigenvalues() {
        let Eigen2::Hyperbolic(e) = eigen2(&q(), 0).unwrap() else {
            panic!("expected hyperbolic")
        };
        let sum = &e.lambda + &e.lambda_inv;
        assert_eq!(sum.as_base(), Some(QuarticElem::from_ints([3, 0, 2, 0])));
        assert_eq!(
            e.lambda.abs().cmp_exact(&e.lambda_inv.abs()),
            std::cmp::Ordering::Greater
        );
        // eigenvector check: Q·v = λ·v
        let v = &e.attracting;
        let base = |x: &QuarticElem| QuadExt::from_base(x.clone(), &e.lambda.d);
        let r0 = &(&base(&q().e11) * &v[0]) + &(&base(&q().e12) * &v[1]);
        assert!((&r0 - &(&e.lambda * &v[0])).is_zero());
        assert_eq!(e.lambda.sign(), Sign::Positive);
    }

    #[test]
    fn parabolic_rejected() {
        assert_eq!(
            eigen2(&RingMat2::identity(), 0).unwrap_err(),
            Error::ParabolicNotSupported
        );
    }

    #[test]
    fn shared_eigenvectors() {
        assert!(share_eigenvector(&q(), &q(), 0).unwrap());
        assert!(share_eigenvector(&q(), &q().mat_inv().unwrap(), 0).unwrap());
        assert_eq!(
            share_eigenvector(&RingMat2::identity(), &q(), 0),
            Err(Error::ScalarMatrix)
        );
    }
}
