//! Candidate sequences `Pₙ` whose Galois views approach a prescribed pair of
//! real matrices, the conditions they must satisfy, and a bounded search.

use crate::construction::paper_generators;
use crate::error::{Error, Result};
use crate::linalg::{classify, eigen2, share_eigenvector, Eigen2, MatClass, RingMat2};
use crate::probe::{
    margin_profile, trivial_words, GeneratorSet, MarginReport, ReducedWord, WordFamily,
};
use crate::projective::{proj_dist, ProjPoint};
use crate::ring::{galois, Interval, QuadExt, QuarticElem, Rational};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::OnceLock;

const PREC: u32 = 64;
pub const RELATION_SCAN_LENGTH: u32 = 10;

/// `Pₙ` with integer coefficients and its three views:
/// `R⁽¹⁾ = σ₂(Pₙ)`, `R⁽²⁾ = σ₃(Pₙ)`, `R⁽³⁾ = σ₀(Pₙ) = Pₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitCandidate {
    pub p_n: RingMat2,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateJson {
    /// `[p, q, r, s]` for `x11, x12, x21, x22`.
    pub coefficients: [[String; 4]; 4],
}

impl LimitCandidate {
    pub fn new(p_n: RingMat2) -> Result<Self> {
        if !p_n.is_integral() {
            return Err(Error::NonIntegralInput);
        }
        if !p_n.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        let c = LimitCandidate { p_n };
        if !c.views_consistent() {
            return Err(Error::InternalMismatch(
                "view formulas disagree with the embeddings".into(),
            ));
        }
        Ok(c)
    }

    pub fn from_coefficients(c: [[i64; 4]; 4]) -> Result<Self> {
        Self::new(RingMat2::from_entries(c.map(QuarticElem::from_ints)))
    }

    pub fn coefficients(&self) -> [[Rational; 4]; 4] {
        self.p_n.entries().map(|x| x.coeffs())
    }

    pub fn to_json(&self) -> CandidateJson {
        CandidateJson {
            coefficients: self
                .coefficients()
                .map(|e| e.map(|r| crate::ring::fmt_rational(&r))),
        }
    }

    pub fn from_json(v: &[[String; 4]; 4]) -> Result<Self> {
        let mut out = [[0i64; 4]; 4];
        for (i, e) in v.iter().enumerate() {
            for (j, s) in e.iter().enumerate() {
                out[i][j] = s.trim().parse().map_err(|_| {
                    Error::InvalidArgument(format!("coefficient {s:?} is not an integer"))
                })?;
            }
        }
        Self::from_coefficients(out)
    }

    /// `R⁽¹⁾` as a real matrix.
    pub fn r1(&self) -> RingMat2 {
        self.p_n.sigma2()
    }

    /// `R⁽³⁾` as a real matrix.
    pub fn r3(&self) -> RingMat2 {
        self.p_n.clone()
    }

    /// The displayed entry formulas against the embeddings:
    /// `(p + rβ²) − (qβ + sβ³) = σ₂(x)`,
    /// `(p − rβ²) − (qβ − sβ³)i = σ₃(x)`, `(p + rβ²) + (qβ + sβ³) = σ₀(x)`.
    fn views_consistent(&self) -> bool {
        self.p_n.entries().iter().all(|x| {
            let (even, odd) = x.split_parity();
            let s3 = galois(x, 3);
            let (flip_p, flip_q) = flip(x);
            &even - &odd == x.sigma2()
                && &even + &odd == **x
                && s3.re == flip_p
                && s3.im == -&flip_q
        })
    }
}

/// `(p − rβ², qβ − sβ³)` for `x = p + qβ + rβ² + sβ³`.
fn flip(x: &QuarticElem) -> (QuarticElem, QuarticElem) {
    let [p, q, r, s] = x.coeffs();
    (
        QuarticElem::from_rationals([p, Rational::zero(), -r, Rational::zero()]),
        QuarticElem::from_rationals([Rational::zero(), q, Rational::zero(), -s]),
    )
}

/// Target limits `R⁽²⁾ → [u_ij]` and `R⁽¹⁾ → [v_ij]`, entries read as
/// real numbers.
#[derive(Debug, Clone)]
pub struct LimitTargets {
    pub u: RingMat2,
    pub v: RingMat2,
    pub relation_scan_length: u32,
    scan: OnceLock<RelationScan>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationScan {
    pub length: u32,
    pub words_checked: u64,
    pub relations: Vec<ReducedWord>,
}

impl LimitTargets {
    pub fn new(u: RingMat2, v: RingMat2) -> Result<Self> {
        if !u.is_unimodular() || !v.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(LimitTargets {
            u,
            v,
            relation_scan_length: RELATION_SCAN_LENGTH,
            scan: OnceLock::new(),
        })
    }

    /// `u = [[3+2√2, 1], [−1, 0]]` (hyperbolic) and `v = [[√2−1, 1], [−1, 0]]`
    /// (elliptic of infinite order). `σ₁(Q)` itself is not usable as `v`:
    /// `(σ₁(Q)·Q)³ = ±I`.
    pub fn default_targets() -> Self {
        let m = |a: [i64; 4]| {
            RingMat2::new(
                QuarticElem::from_ints(a),
                QuarticElem::one(),
                QuarticElem::from_int(-1),
                QuarticElem::zero(),
            )
        };
        Self::new(m([3, 0, 2, 0]), m([-1, 0, 1, 0])).expect("unimodular")
    }

    pub fn with_scan_length(mut self, l: u32) -> Self {
        self.relation_scan_length = l;
        self.scan = OnceLock::new();
        self
    }

    /// Relations among `v` and `Q` up to the scan length; computed once.
    pub fn relation_scan(&self, q: &RingMat2) -> Result<&RelationScan> {
        if let Some(s) = self.scan.get() {
            return Ok(s);
        }
        let gens = GeneratorSet::new(&self.v, q)?;
        let (relations, words_checked) = trivial_words(&gens, self.relation_scan_length);
        Ok(self.scan.get_or_init(|| RelationScan {
            length: self.relation_scan_length,
            words_checked,
            relations,
        }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitVerdict {
    Pass,
    Fail,
    ProbeOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitCondition {
    /// Roman numeral of the condition.
    pub id: &'static str,
    pub name: String,
    pub verdict: LimitVerdict,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Residuals {
    /// `|p − rβ² − u_ij|`.
    pub real_part: [Interval; 4],
    /// `|qβ − sβ³|`.
    pub imaginary_part: [Interval; 4],
    /// `|σ₂(x_ij) − v_ij|`.
    pub sigma2: [Interval; 4],
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitReport {
    pub conditions: Vec<LimitCondition>,
    pub residuals: Residuals,
}

impl LimitReport {
    /// Verdicts of every sub-condition with the given id.
    pub fn verdicts(&self, id: &str) -> Vec<&LimitCondition> {
        self.conditions.iter().filter(|c| c.id == id).collect()
    }

    pub fn holds(&self, id: &str) -> bool {
        self.verdicts(id)
            .iter()
            .all(|c| c.verdict != LimitVerdict::Fail)
    }

    pub fn failing(&self) -> Vec<&LimitCondition> {
        self.conditions
            .iter()
            .filter(|c| c.verdict == LimitVerdict::Fail)
            .collect()
    }
}

fn verdict(b: bool) -> LimitVerdict {
    if b {
        LimitVerdict::Pass
    } else {
        LimitVerdict::Fail
    }
}

fn class_name(c: MatClass) -> String {
    format!("{c:?}").to_lowercase()
}

/// `σ₁(Q)` as a real matrix; needs `Q` over `Q[√2]`.
fn sigma1_real(q: &RingMat2) -> Result<RingMat2> {
    if !q.entries().iter().all(|x| x.is_even()) {
        return Err(Error::InvalidArgument(
            "Q must have entries in Q[√2]".into(),
        ));
    }
    Ok(q.map(|x| flip(x).0))
}

fn abs_iv(x: &QuarticElem) -> Interval {
    Interval::of_quartic(&x.abs(), PREC)
}

/// Exact verdicts for the finite-`n` conditions, the target conditions
/// and the residuals.
pub fn check_limit_conditions(
    cand: &LimitCandidate,
    targets: &LimitTargets,
    q: &RingMat2,
) -> Result<LimitReport> {
    let p = &cand.p_n;
    let mut conds = Vec::new();

    let c1 = classify(p, 2)?;
    conds.push(LimitCondition {
        id: "iv",
        name: "R_n^(1) = sigma_2(P_n) elliptic".into(),
        verdict: verdict(c1.class == MatClass::Elliptic),
        detail: class_name(c1.class),
    });
    let c2 = classify(p, 3)?;
    conds.push(LimitCondition {
        id: "iv",
        name: "R_n^(2) = sigma_3(P_n) hyperbolic".into(),
        verdict: verdict(c2.is_hyperbolic_like()),
        detail: class_name(c2.class),
    });
    let c3 = classify(p, 0)?;
    conds.push(LimitCondition {
        id: "iv",
        name: "R_n^(3) = sigma_0(P_n) hyperbolic".into(),
        verdict: verdict(c3.class == MatClass::Hyperbolic),
        detail: class_name(c3.class),
    });

    let cv = classify(&targets.v, 0)?.class;
    conds.push(LimitCondition {
        id: "v",
        name: "R^(1) = [v_ij] elliptic".into(),
        verdict: verdict(cv == MatClass::Elliptic),
        detail: class_name(cv),
    });
    let cu = classify(&targets.u, 0)?.class;
    conds.push(LimitCondition {
        id: "v",
        name: "R^(2) = [u_ij] hyperbolic".into(),
        verdict: verdict(cu == MatClass::Hyperbolic),
        detail: class_name(cu),
    });

    let scan = targets.relation_scan(q)?;
    conds.push(LimitCondition {
        id: "vi",
        name: "R^(1) and Q generate a free group".into(),
        verdict: if scan.relations.is_empty() {
            LimitVerdict::ProbeOnly
        } else {
            LimitVerdict::Fail
        },
        detail: match scan.relations.first() {
            None => format!(
                "no relation among {} words of length <= {}; freeness for elliptic R^(1) rests on genericity",
                scan.words_checked, scan.length
            ),
            Some(w) => format!("relation {w}"),
        },
    });

    let conj = |g: &RingMat2, x: &RingMat2| -> Result<bool> {
        let c = g.mat_mul(x).mat_mul(&g.mat_inv()?);
        Ok(!RingMat2::commutator(&c, x)?.is_identity())
    };
    conds.push(LimitCondition {
        id: "vii",
        name: "[Q R^(1) Q^-1, R^(1)] != 1".into(),
        verdict: verdict(conj(q, &targets.v)?),
        detail: "exact".into(),
    });
    conds.push(LimitCondition {
        id: "vii",
        name: "[sigma_1(Q) R^(2) sigma_1(Q)^-1, R^(2)] != 1".into(),
        verdict: verdict(conj(&sigma1_real(q)?, &targets.u)?),
        detail: "exact".into(),
    });

    let shared = share_eigenvector(p, q, 0)?;
    conds.push(LimitCondition {
        id: "viii",
        name: "R_n^(3) and Q have no common eigenvector".into(),
        verdict: verdict(!shared),
        detail: "exact resultant".into(),
    });

    let entries = p.entries();
    let (u, v) = (targets.u.entries(), targets.v.entries());
    let residuals = Residuals {
        real_part: std::array::from_fn(|i| abs_iv(&(&flip(entries[i]).0 - u[i]))),
        imaginary_part: std::array::from_fn(|i| abs_iv(&flip(entries[i]).1)),
        sigma2: std::array::from_fn(|i| abs_iv(&(&entries[i].sigma2() - v[i]))),
    };
    Ok(LimitReport {
        conditions: conds,
        residuals,
    })
}

type Coeffs = [i64; 4];

fn mul4(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut c = [0i64; 4];
    for i in 0..4 {
        for j in 0..4 {
            let t = a[i] * b[j];
            if i + j < 4 {
                c[i + j] += t;
            } else {
                c[i + j - 4] += 2 * t;
            }
        }
    }
    c
}

fn all_coeffs(b: i64) -> Vec<Coeffs> {
    let r = -b..=b;
    let mut out = Vec::new();
    for p in r.clone() {
        for q in r.clone() {
            for r2 in r.clone() {
                for s in r.clone() {
                    out.push([p, q, r2, s]);
                }
            }
        }
    }
    out
}

struct TargetsF64 {
    u: [f64; 4],
    v: [f64; 4],
}

fn residual_f64(entries: [&Coeffs; 4], t: &TargetsF64) -> f64 {
    let beta = 2f64.powf(0.25);
    let r2 = std::f64::consts::SQRT_2;
    let mut sum = 0.0;
    for (i, c) in entries.iter().enumerate() {
        let [p, q, r, s] = c.map(|x| x as f64);
        let even_minus = p - r * r2;
        let odd_minus = q * beta - s * beta * r2;
        let s2 = p + r * r2 - (q * beta + s * beta * r2);
        sum += (even_minus - t.u[i]).abs() + odd_minus.abs() + (s2 - t.v[i]).abs();
    }
    sum
}

/// Trace conditions of (iv): `σ₂(t)² < 4`, `σ₀(t)² > 4`, and `σ₃(t)`
/// either non-real or real with square above 4.
fn trace_ok(t: &Coeffs) -> bool {
    let x = QuarticElem::from_ints(*t);
    let four = QuarticElem::from_int(4);
    let s2 = x.sigma2();
    if (&s2 * &s2).cmp_exact(&four).is_ge() || (&x * &x).cmp_exact(&four).is_le() {
        return false;
    }
    if t[1] == 0 && t[3] == 0 {
        let re = flip(&x).0;
        return (&re * &re).cmp_exact(&four).is_gt();
    }
    true
}

/// Exhaustive scan over integer coefficient vectors with entries in
/// `[−B, B]` and determinant 1. Candidates pass (iv) and (viii) exactly and
/// are ranked by total residual, ties broken lexicographically.
pub fn search_limit_candidates(
    bound: u32,
    targets: &LimitTargets,
    q: &RingMat2,
    count: usize,
) -> Result<Vec<LimitCandidate>> {
    if bound == 0 || count == 0 {
        return Ok(Vec::new());
    }
    let b = bound as i64;
    let coeffs = all_coeffs(b);
    // x12·x21 → pairs of indices into `coeffs`
    let mut products: HashMap<Coeffs, Vec<(u32, u32)>> = HashMap::new();
    for (i, x) in coeffs.iter().enumerate() {
        for (j, y) in coeffs.iter().enumerate() {
            products
                .entry(mul4(x, y))
                .or_default()
                .push((i as u32, j as u32));
        }
    }
    let mut trace_cache: HashMap<Coeffs, bool> = HashMap::new();
    for x in &coeffs {
        for y in &coeffs {
            let t = std::array::from_fn(|k| x[k] + y[k]);
            trace_cache.entry(t).or_insert_with(|| trace_ok(&t));
        }
    }
    let f = |m: &RingMat2| -> Vec<f64> { m.entries().iter().map(|x| x.to_f64()).collect() };
    let (uf, vf) = (f(&targets.u), f(&targets.v));
    let tf = TargetsF64 {
        u: [uf[0], uf[1], uf[2], uf[3]],
        v: [vf[0], vf[1], vf[2], vf[3]],
    };
    let mut scored: Vec<(f64, [u32; 4])> = (0..coeffs.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let x11 = &coeffs[i];
            let mut local = Vec::new();
            for (l, x22) in coeffs.iter().enumerate() {
                let t: Coeffs = std::array::from_fn(|k| x11[k] + x22[k]);
                if !trace_cache[&t] {
                    continue;
                }
                let mut m = mul4(x11, x22);
                m[0] -= 1;
                if let Some(pairs) = products.get(&m) {
                    for &(j, k) in pairs {
                        let e = [x11, &coeffs[j as usize], &coeffs[k as usize], x22];
                        local.push((residual_f64(e, &tf), [i as u32, j, k, l as u32]));
                    }
                }
            }
            local
        })
        .collect();
    let key = |idx: &[u32; 4]| idx.map(|i| coeffs[i as usize]);
    scored.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| key(&a.1).cmp(&key(&b.1))));
    let mut out = Vec::new();
    for (_, idx) in scored {
        let c = LimitCandidate::from_coefficients(key(&idx))?;
        if share_eigenvector(&c.p_n, q, 0)? {
            continue;
        }
        let r = check_limit_conditions(&c, targets, q)?;
        if r.holds("iv") && r.holds("viii") {
            out.push(c);
            if out.len() == count {
                break;
            }
        }
    }
    Ok(out)
}

/// Distances of one near-identity word to the eigen-direction `[1 : λ]` of
/// its `σ₀` view, in the pairs `[w11 : w21]` and `[w21 : w22]`.
#[derive(Debug, Clone, Serialize)]
pub struct NearIdentityRow {
    pub word: ReducedWord,
    pub dist_first: Option<Interval>,
    pub dist_second: Option<Interval>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniformityRow {
    pub candidate: CandidateJson,
    pub margin: MarginReport,
    pub near_identity: Vec<NearIdentityRow>,
}

fn dist_to_slope(a: &QuarticElem, b: &QuarticElem, slope: &QuadExt) -> Result<Option<Interval>> {
    if a.is_zero() && b.is_zero() {
        return Ok(None);
    }
    let pt = ProjPoint::from_base(&[a.clone(), b.clone()])?;
    let target = ProjPoint::new(vec![
        QuadExt::from_base(QuarticElem::one(), &slope.d),
        slope.clone(),
    ])?;
    Ok(Some(proj_dist(&pt, &target, PREC)?))
}

/// Margin of `⟨(Qᴺ, σ₁(Q)ᴺ), ((R⁽¹⁾)ᴺ, (R⁽²⁾)ᴺ)⟩` per candidate, with the
/// projective distances for each word closer than `ε` to the identity.
pub fn margin_uniformity_probe(
    candidates: &[LimitCandidate],
    q: &RingMat2,
    n: u64,
    l: u32,
    eps: &Rational,
) -> Result<Vec<UniformityRow>> {
    let mut rows = Vec::with_capacity(candidates.len());
    for c in candidates {
        let fam = WordFamily::new(q, &c.p_n, n, [2, 3], 0)?;
        let margin = margin_profile(&fam, l, crate::probe::DEFAULT_DEPTH_CAP, eps)?
            .pop()
            .expect("l ≥ 1");
        let mut near_identity = Vec::new();
        for r in &margin.escape_rows {
            let w = fam.gens.evaluate(&r.word);
            let slope = match eigen2(&w, 0) {
                Ok(Eigen2::Hyperbolic(e)) => e.attracting_slope(),
                _ => None,
            };
            let (d1, d2) = match slope {
                Some(s) => (
                    dist_to_slope(&w.e11, &w.e21, &s)?,
                    dist_to_slope(&w.e21, &w.e22, &s)?,
                ),
                None => (None, None),
            };
            near_identity.push(NearIdentityRow {
                word: r.word.clone(),
                dist_first: d1,
                dist_second: d2,
            });
        }
        rows.push(UniformityRow {
            candidate: c.to_json(),
            margin,
            near_identity,
        });
    }
    Ok(rows)
}

/// `Q` of the construction.
pub fn paper_q() -> RingMat2 {
    paper_generators().1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_sequence_fails_iv() {
        let (p, q) = paper_generators();
        let c = LimitCandidate::new(p).unwrap();
        let r = check_limit_conditions(&c, &LimitTargets::default_targets(), &q).unwrap();
        let failing: Vec<_> = r.failing().iter().map(|c| c.name.clone()).collect();
        assert_eq!(
            failing,
            [
                "R_n^(1) = sigma_2(P_n) elliptic",
                "R_n^(3) = sigma_0(P_n) hyperbolic"
            ]
        );
        assert!(r.holds("v") && r.holds("vii") && r.holds("viii"));
        assert_eq!(r.verdicts("vi")[0].verdict, LimitVerdict::ProbeOnly);
    }

    #[test]
    fn even_candidate_has_zero_imaginary_residual() {
        let c = LimitCandidate::from_coefficients([
            [2, 0, 1, 0],
            [1, 0, 0, 0],
            [1, 0, 1, 0],
            [1, 0, 0, 0],
        ])
        .unwrap();
        let r = check_limit_conditions(
            &c,
            &LimitTargets::default_targets().with_scan_length(2),
            &paper_q(),
        )
        .unwrap();
        assert!(r.residuals.imaginary_part.iter().all(|i| i.hi.is_zero()));
    }

    #[test]
    fn rejects_non_integral() {
        let m: RingMat2 = "1/2 0 0 0; 0 0 0 0; 0 0 0 0; 2 0 0 0".parse().unwrap();
        assert!(matches!(
            LimitCandidate::new(m),
            Err(Error::NonIntegralInput)
        ));
    }

    #[test]
    fn small_search_is_closed_under_checker() {
        let targets = LimitTargets::default_targets().with_scan_length(2);
        let q = paper_q();
        let found = search_limit_candidates(1, &targets, &q, 5).unwrap();
        let again = search_limit_candidates(1, &targets, &q, 5).unwrap();
        assert_eq!(found, again);
        for c in &found {
            let r = check_limit_conditions(c, &targets, &q).unwrap();
            assert!(r.holds("iv") && r.holds("viii"));
        }
        assert!(search_limit_candidates(0, &targets, &q, 5)
            .unwrap()
            .is_empty());
    }
}
