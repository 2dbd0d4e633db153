//! Attracting/repelling points and characteristic crosses.

use super::point::ProjPoint;
use super::spectrum::{dominant_eigenvalue, Dominant, SpectralSource};
use crate::error::{Error, Result};
use crate::linalg::{class_of_real_trace, eigen_resultant, eigenvector, MatClass, RingMat2};
use crate::ring::{QuadExt, QuarticElem, Rational};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct HyperbolicLikeData {
    pub dim: usize,
    /// Embedding whose block carries the extreme eigenvalues.
    pub block: usize,
    pub dominant: Dominant,
    pub dominant_inverse: Dominant,
    /// `A_C`.
    pub attracting: ProjPoint,
    /// `R_C`.
    pub repelling: ProjPoint,
    /// Normal vector of `Π⁺`, the span of all eigen-directions except the
    /// attracting one.
    pub cross_plus: Vec<QuadExt>,
    /// Normal vector of `Π⁻`, which omits the repelling direction.
    pub cross_minus: Vec<QuadExt>,
}

fn dot(n: &[QuadExt], p: &ProjPoint) -> QuadExt {
    n.iter().zip(&p.coords).fold(
        QuadExt::from_base(QuarticElem::zero(), &n[0].d),
        |acc, (a, b)| &acc + &(a * b),
    )
}

impl HyperbolicLikeData {
    /// Exact membership of `p` in `Π⁺`.
    pub fn in_cross_plus(&self, p: &ProjPoint) -> Result<bool> {
        self.check_dim(p)?;
        Ok(dot(&self.cross_plus, p).is_zero())
    }

    pub fn in_cross_minus(&self, p: &ProjPoint) -> Result<bool> {
        self.check_dim(p)?;
        Ok(dot(&self.cross_minus, p).is_zero())
    }

    fn check_dim(&self, p: &ProjPoint) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, p.dim()));
        }
        Ok(())
    }

    /// `A_C ∉ Π⁺, R_C ∉ Π⁻, A_C ∈ Π⁻, R_C ∈ Π⁺`.
    pub fn cross_relations_hold(&self) -> bool {
        let f = || -> Result<bool> {
            Ok(!self.in_cross_plus(&self.attracting)?
                && !self.in_cross_minus(&self.repelling)?
                && self.in_cross_minus(&self.attracting)?
                && self.in_cross_plus(&self.repelling)?)
        };
        f().unwrap_or(false)
    }
}

/// `(ρ^{-i}/4)` or `ρ^i` for `ρ = σ_k(β)`, `k ∈ {0, 2}`.
fn rho_powers(k: usize, inverse: bool) -> Vec<QuarticElem> {
    let rho = if k == 0 {
        QuarticElem::beta()
    } else {
        -&QuarticElem::beta()
    };
    let step = if inverse {
        rho.inv().expect("β ≠ 0")
    } else {
        rho
    };
    let mut out = Vec::with_capacity(4);
    let mut cur = if inverse {
        QuarticElem::from_rational(Rational::new(1.into(), 4.into()))
    } else {
        QuarticElem::one()
    };
    for _ in 0..4 {
        out.push(cur.clone());
        cur = &cur * &step;
    }
    out
}

/// Lifts a vector of the block `k` to the full space: right eigenvectors
/// when `inverse`, linear functionals otherwise.
fn lift(v: &[QuadExt; 2], k: usize, dim: usize, right: bool) -> Vec<QuadExt> {
    if dim == 2 {
        return v.to_vec();
    }
    let pw = rho_powers(k, right);
    v.iter()
        .flat_map(|vj| pw.iter().map(move |p| vj.scale(p)))
        .collect()
}

/// Left eigenvector for the eigenvalue whose right eigenvector is
/// orthogonal to `other`: `w = (−o₂, o₁)`.
fn left_from_other(other: &[QuadExt; 2]) -> [QuadExt; 2] {
    [-&other[1], other[0].clone()]
}

/// Full hyperbolic-like data when both `M` and `M⁻¹` have dominant
/// eigenvalues.
pub fn hyperbolic_like(src: &SpectralSource) -> Result<Option<HyperbolicLikeData>> {
    let a = src.matrix();
    if a.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let inv = src.inverse()?;
    let (Some(dom), Some(dom_inv)) = (dominant_eigenvalue(src), dominant_eigenvalue(&inv)) else {
        return Ok(None);
    };
    let k = dom.block;
    let view = a.real_view(k)?;
    let lambda = &dom.lambda;
    let lambda_inv = QuadExt::new(lambda.u.clone(), -&lambda.v, lambda.d.clone());
    let u = eigenvector(&view, lambda);
    let u_rep = eigenvector(&view, &lambda_inv);
    let dim = src.dim();
    let attracting = ProjPoint::new(lift(&u, k, dim, true))?;
    let repelling = ProjPoint::new(lift(&u_rep, k, dim, true))?;
    let cross_plus = lift(&left_from_other(&u_rep), k, dim, false);
    let cross_minus = lift(&left_from_other(&u), k, dim, false);
    Ok(Some(HyperbolicLikeData {
        dim,
        block: k,
        dominant: dom,
        dominant_inverse: dom_inv,
        attracting,
        repelling,
        cross_plus,
        cross_minus,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoncommutingReport {
    pub holds: bool,
    /// Hypothesis that failed, when `holds` is false.
    pub reason: Option<String>,
    pub commutator_is_identity: bool,
}

/// For real 2×2 matrices: both hyperbolic, `F_A ∩ F_B = ∅` and
/// `A(F_B) ∩ F_B = ∅` imply `AB ≠ BA`. The commutator is also computed.
pub fn noncommuting_check(a: &RingMat2, b: &RingMat2) -> NoncommutingReport {
    let commutator_is_identity = RingMat2::commutator(a, b)
        .map(|c| c.is_identity())
        .unwrap_or(false);
    let fail = |r: &str| NoncommutingReport {
        holds: false,
        reason: Some(r.to_string()),
        commutator_is_identity,
    };
    for (m, name) in [(a, "A"), (b, "B")] {
        if !m.is_unimodular() || class_of_real_trace(&m.trace()) != MatClass::Hyperbolic {
            return fail(&format!("{name} is not hyperbolic"));
        }
    }
    let disjoint = |x: &RingMat2, y: &RingMat2| {
        eigen_resultant(x, y, 0)
            .map(|r| !r.is_zero())
            .unwrap_or(false)
    };
    if !disjoint(a, b) {
        return fail("A and B share a fixed point");
    }
    let moved = match a.mat_inv() {
        Ok(ai) => a.mat_mul(b).mat_mul(&ai),
        Err(_) => return fail("A is singular"),
    };
    if !disjoint(&moved, b) {
        return fail("A(F_B) meets F_B");
    }
    NoncommutingReport {
        holds: !commutator_is_identity,
        reason: commutator_is_identity.then(|| "commutator is the identity".to_string()),
        commutator_is_identity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> RingMat2 {
        "5 -3 1 -2; 1 0 0 0; -1 0 0 0; 0 0 0 0".parse().unwrap()
    }

    fn q() -> RingMat2 {
        "3 0 2 0; 1 0 0 0; -1 0 0 0; 0 0 0 0".parse().unwrap()
    }

    #[test]
    fn psi_p_is_hyperbolic_like() {
        let d = hyperbolic_like(&SpectralSource::Psi(p())).unwrap().unwrap();
        assert_eq!(d.dim, 8);
        assert!(d.cross_relations_hold());
        assert!(hyperbolic_like(&SpectralSource::Psi(q()))
            .unwrap()
            .is_none());
    }

    #[test]
    fn attracting_point_is_eigenvector_of_psi() {
        let d = hyperbolic_like(&SpectralSource::Psi(p())).unwrap().unwrap();
        let psi = crate::linalg::regular_rep(&p(), 4).unwrap().m;
        let x = &d.attracting.coords;
        let lam = &d.dominant.lambda;
        for i in 0..8 {
            let mut acc = QuadExt::from_base(QuarticElem::zero(), &lam.d);
            for (j, xj) in x.iter().enumerate() {
                acc = &acc + &xj.scale(&QuarticElem::from_rational(psi.get(i, j).clone()));
            }
            assert!((&acc - &(lam * &x[i])).is_zero(), "row {i}");
        }
    }

    #[test]
    fn noncommuting() {
        let a = p().sigma2();
        let b = q().sigma2();
        let r = noncommuting_check(&a, &b);
        assert!(r.holds, "{r:?}");
        let sq = a.mat_mul(&a);
        assert!(!noncommuting_check(&a, &sq).holds);
        assert!(!noncommuting_check(&b, &b.mat_inv().unwrap()).holds);
    }
}
