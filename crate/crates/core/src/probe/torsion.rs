use crate::error::Result;
use crate::linalg::{classify, MatClass, RingMat2};
use crate::ring::QuarticElem;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum TorsionResult {
    NonTorsionUpTo {
        n_max: u64,
    },
    /// `Aⁿ = ±I` first at `order_mod_center`; `Aⁿ = I` first at
    /// `absolute_order`.
    TorsionOfOrder {
        order_mod_center: u64,
        absolute_order: u64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsionReport {
    pub embedding: usize,
    pub class: MatClass,
    pub result: TorsionResult,
}

/// First `n ≤ n_max` with `Aⁿ = ±I`, by the scalar recurrence
/// `Aⁿ = Uₙ A − Uₙ₋₁ I`, `Uₙ = t Uₙ₋₁ − Uₙ₋₂`.
pub fn torsion_probe(a: &RingMat2, k: usize, n_max: u64) -> Result<TorsionReport> {
    let class = classify(a, k)?.class;
    let report = |result| TorsionReport {
        embedding: k,
        class,
        result,
    };
    let hit = |n: u64, plus: bool| TorsionResult::TorsionOfOrder {
        order_mod_center: n,
        absolute_order: if plus { n } else { 2 * n },
    };
    if a.is_identity() {
        return Ok(report(hit(1, true)));
    }
    if a.is_neg_identity() {
        return Ok(report(hit(1, false)));
    }
    if a.is_scalar() {
        // a scalar unimodular matrix other than ±I cannot be torsion
        // over a real field
        return Ok(report(TorsionResult::NonTorsionUpTo { n_max }));
    }
    let t = a.trace();
    let one = QuarticElem::one();
    let (mut prev, mut cur) = (QuarticElem::zero(), one.clone());
    for n in 2..=n_max {
        let next = &(&t * &cur) - &prev;
        prev = cur;
        cur = next;
        if cur.is_zero() {
            if prev == -&one {
                return Ok(report(hit(n, true)));
            }
            if prev == one {
                return Ok(report(hit(n, false)));
            }
        }
    }
    Ok(report(TorsionResult::NonTorsionUpTo { n_max }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::paper_generators;

    fn order(a: &RingMat2) -> TorsionResult {
        torsion_probe(a, 0, 100).unwrap().result
    }

    #[test]
    fn small_orders() {
        let tor = |c, a| TorsionResult::TorsionOfOrder {
            order_mod_center: c,
            absolute_order: a,
        };
        assert_eq!(order(&RingMat2::from_ints(-1, 0, 0, -1)), tor(1, 2));
        assert_eq!(order(&RingMat2::from_ints(0, 1, -1, 0)), tor(2, 4));
        assert_eq!(order(&RingMat2::from_ints(0, -1, 1, 1)), tor(3, 6));
        assert_eq!(order(&RingMat2::from_ints(-1, -1, 1, 0)), tor(3, 3));
        // rotation by π/4: trace √2 = β²
        let r8: RingMat2 = "0 0 1 0; -1 0 0 0; 1 0 0 0; 0 0 0 0".parse().unwrap();
        assert_eq!(order(&r8), tor(4, 8));
        assert_eq!(
            order(&RingMat2::from_ints(2, 1, 1, 1)),
            TorsionResult::NonTorsionUpTo { n_max: 100 }
        );
    }

    #[test]
    fn agrees_with_powering() {
        let r8: RingMat2 = "0 0 1 0; -1 0 0 0; 1 0 0 0; 0 0 0 0".parse().unwrap();
        assert!(r8.pow_u(4).is_neg_identity());
        assert!(r8.pow_u(8).is_identity());
        let (p, _) = paper_generators();
        let r = torsion_probe(&p, 0, 200).unwrap();
        assert_eq!(r.class, MatClass::Elliptic);
        assert_eq!(r.result, TorsionResult::NonTorsionUpTo { n_max: 200 });
    }
}
