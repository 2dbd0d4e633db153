use crate::error::Result;
use crate::linalg::{classify, eigen2, share_eigenvector, Eigen2, MatClass, RingMat2};
use crate::projective::ProjPoint;
use serde::Serialize;

/// Verdicts for the fixed-point and commutator conditions, evaluated on the
/// `σ₂` views (where they can hold) and on exact products.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub m: u64,
    pub n: u64,
    pub sigma2_hyperbolic: bool,
    /// `F_P ∩ F_Q = ∅` for the `σ₂` views (no common eigenvector).
    pub condition1: bool,
    /// `F_P ∩ Π_Q = ∅ = F_Q ∩ Π_P`; in size two this compares the same
    /// four points, checked pointwise.
    pub condition2: bool,
    /// `[(σ₂Q)ᴹ(σ₂P)ᴺ(σ₂Q)⁻ᴹ, (σ₂P)ᴺ] ≠ I`.
    pub condition3_first: bool,
    /// `[(σ₂P)ᴹ(σ₂Q)ᴺ(σ₂P)⁻ᴹ, (σ₂Q)ᴺ] ≠ I`.
    pub condition3_second: bool,
}

impl ConditionReport {
    pub fn condition3(&self) -> bool {
        self.condition3_first && self.condition3_second
    }

    pub fn all_hold(&self) -> bool {
        self.sigma2_hyperbolic && self.condition1 && self.condition2 && self.condition3()
    }
}

fn fixed_points(a: &RingMat2) -> Result<Option<[ProjPoint; 2]>> {
    match eigen2(a, 2)? {
        Eigen2::Hyperbolic(e) => Ok(Some([
            ProjPoint::new(e.attracting.to_vec())?,
            ProjPoint::new(e.repelling.to_vec())?,
        ])),
        _ => Ok(None),
    }
}

fn nontrivial_commutator(x: &RingMat2, y: &RingMat2, m: u64, n: u64) -> Result<bool> {
    let xm = x.pow_u(m);
    let yn = y.pow_u(n);
    let conj = xm.mat_mul(&yn).mat_mul(&xm.mat_inv()?);
    Ok(!RingMat2::commutator(&conj, &yn)?.is_identity())
}

pub fn check_conditions(p: &RingMat2, q: &RingMat2, m: u64, n: u64) -> Result<ConditionReport> {
    let sigma2_hyperbolic = classify(p, 2)?.class == MatClass::Hyperbolic
        && classify(q, 2)?.class == MatClass::Hyperbolic;
    let condition1 = !share_eigenvector(p, q, 2)?;
    let condition2 = match (fixed_points(p)?, fixed_points(q)?) {
        (Some(fp), Some(fq)) => {
            let mut disjoint = true;
            for a in &fp {
                for b in &fq {
                    disjoint &= !a.same_point(b)?;
                }
            }
            disjoint
        }
        _ => false,
    };
    let (sp, sq) = (p.sigma2(), q.sigma2());
    Ok(ConditionReport {
        m,
        n,
        sigma2_hyperbolic,
        condition1,
        condition2,
        condition3_first: nontrivial_commutator(&sq, &sp, m, n)?,
        condition3_second: nontrivial_commutator(&sp, &sq, m, n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::paper_generators;

    #[test]
    fn paper_pair() {
        let (p, q) = paper_generators();
        let r = check_conditions(&p, &q, 1, 1).unwrap();
        assert!(r.all_hold(), "{r:?}");
        let r = check_conditions(&p, &p, 1, 1).unwrap();
        assert!(!r.condition1 && !r.condition2 && !r.condition3());
    }
}
