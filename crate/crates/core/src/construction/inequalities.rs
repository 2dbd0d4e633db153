//! Evaluators for the inequalities used in the discreteness argument. They
//! report values and verdicts on concrete matrices; nothing is asserted.

use super::generators::paper_generators;
use crate::error::{Error, Result};
use crate::linalg::{eigen2, Eigen2, RingMat2};
use crate::projective::{proj_dist, ProjPoint};
use crate::ring::{
    delta, delta1, delta2, galois, rat, ratio, signedness, Interval, QuadExt, QuarticElem,
    Rational, Signedness,
};
use num_traits::Zero;
use serde::Serialize;

pub const PROBED_INEQUALITIES: [u32; 9] = [4, 6, 7, 8, 9, 10, 11, 13, 14];

const PREC: u32 = 96;

#[derive(Debug, Clone)]
pub struct InequalityParams {
    /// Projective distance threshold `D`.
    pub d: Rational,
    /// `ε` for the near-identity bounds.
    pub eps: Rational,
    /// `K₂` for the `C ± D√2` bound.
    pub k2: Rational,
}

impl Default for InequalityParams {
    fn default() -> Self {
        InequalityParams {
            d: ratio(1, 2),
            eps: ratio(1, 100),
            k2: rat(1),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub label: String,
    pub lhs: Interval,
    pub rhs: Interval,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityRecord {
    pub which: u32,
    pub checks: Vec<InequalityCheck>,
    /// How the checks combine: `all` or `any`.
    pub combine: &'static str,
    pub holds: bool,
}

fn pow10(e: i32) -> Rational {
    let p = Rational::from_integer(num_bigint::BigInt::from(10).pow(e.unsigned_abs()));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn iv(x: &QuarticElem) -> Interval {
    Interval::of_quartic(x, PREC)
}

fn riv(x: &Rational) -> Interval {
    Interval::point(x.clone())
}

/// `|x| < |y|` decided exactly.
fn abs_lt(x: &QuarticElem, y: &QuarticElem) -> bool {
    x.abs().cmp_exact(&y.abs()).is_lt()
}

fn delta_or_zero(
    f: fn(&QuarticElem) -> Result<QuarticElem>,
    x: &QuarticElem,
) -> Result<QuarticElem> {
    if x.is_zero() {
        Ok(QuarticElem::zero())
    } else {
        f(x)
    }
}

/// Entries `ζ − 1, η, μ, ν − 1` of `σ₂(A) − I`.
fn shifted_sigma2(a: &RingMat2) -> [QuarticElem; 4] {
    let s = a.sigma2();
    let one = QuarticElem::one();
    [&s.e11 - &one, s.e12, s.e21, &s.e22 - &one]
}

/// Slope `λ₁` of the attracting eigenvector `[1 : λ₁]` of `σ₂(P)`.
pub fn reference_slope() -> QuadExt {
    let (p, _) = paper_generators();
    match eigen2(&p, 2) {
        Ok(Eigen2::Hyperbolic(e)) => e.attracting_slope().expect("finite slope"),
        _ => unreachable!("σ₂(P) is hyperbolic"),
    }
}

/// `max{|λ₁|, |λ₁|⁻¹}` as an enclosure.
fn slope_scale() -> Interval {
    let l = reference_slope().abs();
    let li = l.inv().expect("nonzero slope");
    l.interval(PREC).max(&li.interval(PREC))
}

/// `lo < |x/y| < hi` with both bounds given as enclosures; `None` when
/// `y = 0`.
fn ratio_check(
    label: &str,
    x: &QuarticElem,
    y: &QuarticElem,
    lo: &Interval,
    hi: &Interval,
) -> InequalityCheck {
    if y.is_zero() {
        return InequalityCheck {
            label: format!("{label} (zero denominator)"),
            lhs: Interval::zero(),
            rhs: hi.clone(),
            holds: false,
        };
    }
    let r = iv(&(x * &y.inv().expect("nonzero")).abs());
    InequalityCheck {
        label: label.to_string(),
        holds: lo.strictly_below(&r) && r.strictly_below(hi),
        lhs: r,
        rhs: hi.clone(),
    }
}

fn signs16() -> impl Iterator<Item = [i64; 4]> {
    (0..16).map(|m| [0, 1, 2, 3].map(|b| if m >> b & 1 == 1 { -1 } else { 1 }))
}

fn sign_label(s: &[i64; 4]) -> String {
    s.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect()
}

/// Evaluates one inequality on `A ∈ SL(2, Z[β])`.
pub fn inequality_probe(
    a: &RingMat2,
    which: u32,
    params: &InequalityParams,
) -> Result<InequalityRecord> {
    if !a.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let [zm1, eta, mu, nm1] = shifted_sigma2(a);
    let mut checks = Vec::new();
    let mut combine = "all";
    match which {
        4 => {
            let slope = reference_slope();
            let target = ProjPoint::new(vec![
                QuadExt::from_base(QuarticElem::one(), &slope.d),
                slope,
            ])?;
            let coeff = |x: &QuarticElem| x.coeff(3);
            let pairs = [
                ("[e:g]", coeff(&a.e11), coeff(&a.e21)),
                ("[f:h]", coeff(&a.e12), coeff(&a.e22)),
            ];
            for (label, x, y) in pairs {
                if x.is_zero() && y.is_zero() {
                    checks.push(InequalityCheck {
                        label: format!("{label} undefined"),
                        lhs: Interval::zero(),
                        rhs: riv(&params.d),
                        holds: false,
                    });
                    continue;
                }
                let pt = ProjPoint::from_base(&[
                    QuarticElem::from_rational(x),
                    QuarticElem::from_rational(y),
                ])?;
                let d = proj_dist(&pt, &target, PREC)?;
                checks.push(InequalityCheck {
                    label: format!("dist({label}, [1:λ₁]) < D"),
                    holds: d.strictly_below(&riv(&params.d)),
                    lhs: d,
                    rhs: riv(&params.d),
                });
            }
        }
        6 => {
            let min12 = |x: &QuarticElem| -> Result<QuarticElem> {
                let d1 = delta_or_zero(delta1, x)?;
                let d2 = delta_or_zero(delta2, x)?;
                Ok(if d1.cmp_exact(&d2).is_lt() { d1 } else { d2 })
            };
            let max2 = |x: QuarticElem, y: QuarticElem| if x.cmp_exact(&y).is_gt() { x } else { y };
            let first = max2(min12(&zm1)?, min12(&mu)?);
            let second = max2(min12(&eta)?, min12(&nm1)?);
            let bound = QuarticElem::from_rational(pow10(-3));
            for (label, v) in [("{ζ−1, μ}", first), ("{η, ν−1}", second)] {
                checks.push(InequalityCheck {
                    label: format!("max over {label} of min(Δ₁, Δ₂) > 10⁻³"),
                    holds: v.cmp_exact(&bound).is_gt(),
                    lhs: iv(&v),
                    rhs: iv(&bound),
                });
            }
        }
        7 => {
            let one = QuarticElem::one();
            let lo = riv(&pow10(-3));
            let hi = riv(&pow10(3));
            let r1 = ratio_check("|(ζ''−1)/μ''|", &(&a.e11 - &one), &a.e21, &lo, &hi);
            let r2 = ratio_check("|η''/(ν''−1)|", &a.e12, &(&a.e22 - &one), &lo, &hi);
            checks.push(r1);
            checks.push(r2);
        }
        8 => {
            let one = QuarticElem::one();
            let eps = QuarticElem::from_rational(params.eps.clone());
            let big = QuarticElem::from_rational(pow10(6));
            let entries = [
                ("ζ''−1", &a.e11 - &one),
                ("η''", a.e12.clone()),
                ("μ''", a.e21.clone()),
                ("ν''−1", &a.e22 - &one),
            ];
            let mut any_chain = false;
            for (label, x) in &entries {
                let s2 = x.sigma2();
                let all_part =
                    abs_lt(x, &eps) && abs_lt(&big, &s2) && signedness(&s2) != Signedness::Unsigned;
                checks.push(InequalityCheck {
                    label: format!("|σ₀({label})| < ε < 10⁶ < |σ₂({label})|, σ₂ signed"),
                    lhs: iv(x).abs(),
                    rhs: iv(&s2).abs(),
                    holds: all_part,
                });
                let s1 = galois(x, 1);
                let n1 = s1.norm_sq();
                let lo = QuarticElem::from_rational(pow10(-6));
                let hi = QuarticElem::from_int(100);
                let ten = QuarticElem::from_int(10);
                any_chain |= abs_lt(x, &eps)
                    && lo.cmp_exact(&n1).is_lt()
                    && n1.cmp_exact(&hi).is_lt()
                    && abs_lt(&ten, &s2);
            }
            checks.push(InequalityCheck {
                label: "some entry: |σ₀(x)| < ε < 10⁻³ < |σ₁(x)| < 10 < |σ₂(x)|".into(),
                lhs: riv(&params.eps),
                rhs: riv(&pow10(-3)),
                holds: any_chain && params.eps < pow10(-3),
            });
        }
        9 | 10 => {
            combine = "any";
            let m = slope_scale();
            let e = if which == 9 { 6 } else { 12 };
            let lo = m.inv().expect("positive").scale(&pow10(-e));
            let hi = m.scale(&pow10(e));
            let fs: Vec<(&str, fn(&QuarticElem) -> Result<QuarticElem>)> = if which == 9 {
                vec![("Δ", delta)]
            } else {
                vec![("Δ₁", delta1), ("Δ₂", delta2)]
            };
            for (name, f) in fs {
                let x = delta_or_zero(f, &zm1)?;
                let z = delta_or_zero(f, &mu)?;
                let y = delta_or_zero(f, &eta)?;
                let w = delta_or_zero(f, &nm1)?;
                checks.push(ratio_check(
                    &format!("|{name}(ζ−1)/{name}(μ)|"),
                    &x,
                    &z,
                    &lo,
                    &hi,
                ));
                checks.push(ratio_check(
                    &format!("|{name}(η)/{name}(ν−1)|"),
                    &y,
                    &w,
                    &lo,
                    &hi,
                ));
            }
        }
        11 | 13 => {
            let tau = if which == 11 {
                QuarticElem::from_ints([3, 0, 2, 0])
            } else {
                QuarticElem::from_ints([3, 0, -2, 0])
            };
            let vals = if which == 11 {
                [
                    delta_or_zero(delta1, &eta)?,
                    delta_or_zero(delta1, &mu)?,
                    delta_or_zero(delta1, &nm1)?,
                    delta_or_zero(delta1, &zm1)?,
                ]
            } else {
                [eta.clone(), mu.clone(), zm1.clone(), nm1.clone()]
            };
            let rhs = if which == 11 {
                slope_scale().inv().expect("positive").scale(&pow10(-20))
            } else {
                riv(&rat(1))
            };
            let two = QuarticElem::from_int(2);
            for s in signs16() {
                let t = |i: usize| vals[i].scale_int(s[i]);
                let v = &(&tau * &(&t(0) - &t(1))) + &(&two * &(&t(2) - &t(3)));
                let lhs = iv(&v).abs();
                let holds = if which == 13 {
                    v.abs().cmp_exact(&QuarticElem::one()).is_gt()
                } else {
                    rhs.strictly_below(&lhs)
                };
                checks.push(InequalityCheck {
                    label: format!("signs {}", sign_label(&s)),
                    lhs,
                    rhs: rhs.clone(),
                    holds,
                });
            }
        }
        14 => {
            let tau = QuarticElem::from_ints([3, 0, 2, 0]);
            let two = QuarticElem::from_int(2);
            let d1 = |x: &QuarticElem| delta_or_zero(delta1, x);
            let v = &(&tau * &(&d1(&eta)? - &d1(&mu)?)) + &(&two * &(&d1(&nm1)? - &d1(&zm1)?));
            let q = v
                .as_quad()
                .ok_or_else(|| Error::InternalMismatch("Δ₁ left Q[√2]".into()))?;
            let k2 = QuarticElem::from_rational(params.k2.clone());
            for (label, x) in [("|C + D√2|", q.clone()), ("|C − D√2|", q.conj())] {
                let xa = x.to_quartic().abs();
                checks.push(InequalityCheck {
                    label: format!(
                        "{label} > K₂ (C = {}, D = {})",
                        crate::ring::fmt_rational(&q.u),
                        crate::ring::fmt_rational(&q.v)
                    ),
                    lhs: iv(&xa),
                    rhs: riv(&params.k2),
                    holds: xa.cmp_exact(&k2).is_gt(),
                });
            }
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "inequality {which} is not probed; choose one of {PROBED_INEQUALITIES:?}"
            )))
        }
    }
    let holds = if combine == "all" {
        checks.iter().all(|c| c.holds)
    } else {
        checks.iter().any(|c| c.holds)
    };
    Ok(InequalityRecord {
        which,
        checks,
        combine,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_fails_trivially() {
        let p = InequalityParams::default();
        for w in [11, 13] {
            let r = inequality_probe(&RingMat2::identity(), w, &p).unwrap();
            assert_eq!(r.checks.len(), 16);
            assert!(!r.holds);
        }
        assert!(
            !inequality_probe(&RingMat2::identity(), 4, &p)
                .unwrap()
                .holds
        );
        assert!(inequality_probe(&RingMat2::identity(), 5, &p).is_err());
    }

    #[test]
    fn pq_gives_a_verdict() {
        let (p, q) = paper_generators();
        let pq = p.mat_mul(&q);
        let r = inequality_probe(&pq, 13, &InequalityParams::default()).unwrap();
        assert_eq!(r.checks.len(), 16);
        let plus = &r.checks[0];
        assert_eq!(plus.label, "signs ++++");
    }
}
