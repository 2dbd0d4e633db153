use crate::error::{Error, Result};
use crate::linalg::{EmbeddedMat2, RingMat2};
use crate::ring::QuarticElem;

/// `P = [[5 − 3β + β² − 2β³, 1], [−1, 0]]` and `Q = [[3 + 2β², 1], [−1, 0]]`.
pub fn paper_generators() -> (RingMat2, RingMat2) {
    let one = QuarticElem::one();
    let p = RingMat2::new(
        QuarticElem::from_ints([5, -3, 1, -2]),
        one.clone(),
        -&one,
        QuarticElem::zero(),
    );
    let q = RingMat2::new(
        QuarticElem::from_ints([3, 0, 2, 0]),
        one.clone(),
        -&one,
        QuarticElem::zero(),
    );
    (p, q)
}

/// `f = (σ₀(Pᴺ), σ₁(Pᴺ))`, `g = (σ₀(Qᴺ), σ₁(Qᴺ))`.
#[derive(Debug, Clone)]
pub struct GammaGenerators {
    pub p: RingMat2,
    pub q: RingMat2,
    pub n: u64,
    pub p_n: RingMat2,
    pub q_n: RingMat2,
}

impl GammaGenerators {
    pub fn new(p: RingMat2, q: RingMat2, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        if !p.is_unimodular() || !q.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(GammaGenerators {
            p_n: p.pow_u(n),
            q_n: q.pow_u(n),
            p,
            q,
            n,
        })
    }

    pub fn paper(n: u64) -> Result<Self> {
        let (p, q) = paper_generators();
        Self::new(p, q, n)
    }

    pub fn f(&self) -> (RingMat2, EmbeddedMat2) {
        (self.p_n.clone(), self.p_n.embed(1).expect("embedding 1"))
    }

    pub fn g(&self) -> (RingMat2, EmbeddedMat2) {
        (self.q_n.clone(), self.q_n.embed(1).expect("embedding 1"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_as_displayed() {
        let (p, q) = paper_generators();
        assert_eq!(p.e11.to_string(), "5 -3 1 -2");
        assert!(p.is_unimodular() && q.is_unimodular());
        assert_eq!(q.trace(), QuarticElem::from_ints([3, 0, 2, 0]));
        assert!(GammaGenerators::paper(0).is_err());
        let g = GammaGenerators::paper(2).unwrap();
        assert_eq!(g.p_n, p.mat_mul(&p));
        let p1 = p.embed(1).unwrap();
        assert_eq!(g.f().1, p1.mat_mul(&p1));
    }
}
