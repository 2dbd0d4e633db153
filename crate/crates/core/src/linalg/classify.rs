use super::RingMat2;
use crate::error::{Error, Result};
use crate::ring::{galois, EmbeddedComplex, QuarticElem, Sign};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
    Loxodromic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: MatClass,
    /// Set for loxodromic elements, which are called hyperbolic in the
    /// looser `SL(2,C)` usage.
    pub as_paper_hyperbolic: bool,
    pub trace: EmbeddedComplex,
}

/// Class of a real trace: `t² < 4`, `= 4`, `> 4`.
pub fn class_of_real_trace(t: &QuarticElem) -> MatClass {
    match (&(t * t) - &QuarticElem::from_int(4)).sign() {
        Sign::Negative => MatClass::Elliptic,
        Sign::Zero => MatClass::Parabolic,
        Sign::Positive => MatClass::Hyperbolic,
    }
}

/// Classifies `σ_k(A)` by an exact trace test.
pub fn classify(a: &RingMat2, k: usize) -> Result<Classification> {
    if k > 3 {
        return Err(Error::BadEmbedding(k));
    }
    if !a.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let trace = galois(&a.trace(), k);
    if !trace.is_real() {
        return Ok(Classification {
            class: MatClass::Loxodromic,
            as_paper_hyperbolic: true,
            trace,
        });
    }
    Ok(Classification {
        class: class_of_real_trace(&trace.re),
        as_paper_hyperbolic: false,
        trace,
    })
}

impl Classification {
    /// Hyperbolic, or loxodromic counted as hyperbolic.
    pub fn is_hyperbolic_like(&self) -> bool {
        matches!(self.class, MatClass::Hyperbolic | MatClass::Loxodromic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_is_elliptic() {
        let r = RingMat2::from_ints(0, 1, -1, 0);
        assert_eq!(classify(&r, 0).unwrap().class, MatClass::Elliptic);
        let shear = RingMat2::from_ints(1, 1, 0, 1);
        assert_eq!(classify(&shear, 2).unwrap().class, MatClass::Parabolic);
        assert_eq!(
            classify(&RingMat2::from_ints(2, 0, 0, 1), 0),
            Err(Error::NotUnimodular)
        );
    }
}
