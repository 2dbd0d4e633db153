//! Ping-pong certificates for pairs of hyperbolic real 2×2 matrices.
//!
//! Each of `A^{±N}`, `B^{±N}` gets a closed chordal ball around a rational
//! approximation of its attracting point. The balls share one radius `r`
//! and are pairwise disjoint. For a map `X` with target ball `T` and
//! excluded ball `E` (the ball of `X⁻¹`), the points `e± = c_E ± (r/2)·c_E⊥`
//! lie inside `E` on either side of its center, so the complement of `E`
//! is contained in the arc `K` from `e−` to `e+` avoiding `c_E`. Its image
//! `X(K)` lies in `T` as soon as `X(e±) ∈ T` and `X(c_E) ∉ T`. All of these
//! are exact comparisons in `Q[β]`.

use super::point::chordal_sq;
use crate::error::{Error, Result};
use crate::linalg::{classify, real_eigen, share_eigenvector, Eigen2, MatClass, RingMat2};
use crate::ring::{fmt_rational, parse_rational, Interval, QuadExt, QuarticElem, Rational, Sign};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ball {
    /// `A`, `A^-1`, `B` or `B^-1`: the map whose attracting ball this is.
    pub label: String,
    pub center: [String; 2],
    pub radius: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverCell {
    pub map: String,
    pub excluded: usize,
    pub target: usize,
    /// The two endpoints of the arc covering the complement of the
    /// excluded ball.
    pub endpoints: [[String; 2]; 2],
    /// Upper bound on the chordal distance from the image arc endpoints to
    /// the target center (a contraction record).
    pub image_radius_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckedCondition {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PingPongCertificate {
    #[serde(rename = "N")]
    pub n: u64,
    pub generators: [Vec<Vec<String>>; 2],
    pub balls: Vec<Ball>,
    pub cover_cells: Vec<CoverCell>,
    pub checked_conditions: Vec<CheckedCondition>,
}

impl PingPongCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

type Pt = [QuarticElem; 2];

/// Rational dyadic approximation of the projective point of `v`, scaled so
/// that its larger coordinate is `1`.
fn rational_point(v: &[QuadExt; 2], bits: u32) -> Pt {
    let (num, den, swap) = if v[0].abs().cmp_exact(&v[1].abs()) != std::cmp::Ordering::Less {
        (&v[1], &v[0], false)
    } else {
        (&v[0], &v[1], true)
    };
    let ratio = num * &den.inv().expect("nonzero eigenvector coordinate");
    let mid = ratio.interval(bits + 8).mid();
    let scale = BigInt::one() << bits;
    let rounded =
        (mid * Rational::from_integer(scale.clone())).round() / Rational::from_integer(scale);
    let s = QuarticElem::from_rational(rounded);
    if swap {
        [s, QuarticElem::one()]
    } else {
        [QuarticElem::one(), s]
    }
}

fn apply(m: &RingMat2, p: &Pt) -> Pt {
    [
        &(&m.e11 * &p[0]) + &(&m.e12 * &p[1]),
        &(&m.e21 * &p[0]) + &(&m.e22 * &p[1]),
    ]
}

fn rat_sq_less(x: &QuarticElem, r2: &Rational) -> Sign {
    (x - &QuarticElem::from_rational(r2.clone())).sign()
}

fn endpoints(c: &[Rational; 2], r: &Rational) -> [[Rational; 2]; 2] {
    let t = r / Rational::from_integer(2.into());
    let perp = [-c[1].clone(), c[0].clone()];
    [
        [&c[0] - &t * &perp[0], &c[1] - &t * &perp[1]],
        [&c[0] + &t * &perp[0], &c[1] + &t * &perp[1]],
    ]
}

fn to_pt(c: &[Rational; 2]) -> Pt {
    [
        QuarticElem::from_rational(c[0].clone()),
        QuarticElem::from_rational(c[1].clone()),
    ]
}

/// The four maps in ball order `A, A^-1, B, B^-1` with, for each, the index
/// of the ball it must avoid (its inverse's).
const LABELS: [&str; 4] = ["A", "A^-1", "B", "B^-1"];
const EXCLUDED: [usize; 4] = [1, 0, 3, 2];

struct Setup {
    centers: [[Rational; 2]; 4],
    radius: Rational,
}

/// Exact fixed points of both maps plus what is needed to pick the
/// center precision for a given exponent.
struct FixedPoints {
    points: [[QuadExt; 2]; 4],
    radius: Rational,
    /// `log₂` of the larger spectral radius, rounded up generously.
    log2_lambda: f64,
}

const BASE_BITS: u32 = 48;

fn attracting_of(m: &RingMat2) -> Result<([QuadExt; 2], [QuadExt; 2])> {
    match real_eigen(m, 64)? {
        Eigen2::Hyperbolic(e) => Ok((e.attracting, e.repelling)),
        _ => Err(Error::NotHyperbolicLike),
    }
}

fn log2_spectral_radius(m: &RingMat2) -> f64 {
    let (lo, hi) = Interval::of_quartic(&m.trace(), 64).to_f64_bounds();
    let t = lo.abs().max(hi.abs());
    ((t + (t * t - 4.0).max(0.0).sqrt()) / 2.0).log2()
}

fn fixed_points(a: &RingMat2, b: &RingMat2) -> Result<FixedPoints> {
    let (aa, ar) = attracting_of(a)?;
    let (ba, br) = attracting_of(b)?;
    let points = [aa, ar, ba, br];
    let pts = points.clone().map(|v| rational_point(&v, BASE_BITS));
    let mut min_d2: Option<Rational> = None;
    for i in 0..4 {
        for j in i + 1..4 {
            let d2 = chordal_sq(&pts[i], &pts[j]).as_rational().unwrap();
            min_d2 = Some(match min_d2 {
                Some(m) if m <= d2 => m,
                _ => d2,
            });
        }
    }
    let min_d2 = min_d2.unwrap();
    if min_d2.is_zero() {
        return Err(Error::HypothesisViolated("fixed points coincide".into()));
    }
    // largest r = 2^-j ≤ 1/4 with (2r)² < min_d2
    let mut radius = Rational::new(1.into(), 4.into());
    let four = Rational::from_integer(4.into());
    while &four * &radius * &radius >= min_d2 {
        radius /= Rational::from_integer(2.into());
    }
    let log2_lambda = log2_spectral_radius(a).max(log2_spectral_radius(b));
    Ok(FixedPoints {
        points,
        radius,
        log2_lambda,
    })
}

/// Ball centers precise enough for exponent `n`: the error in the excluded
/// center is stretched by up to `λ^{2n}` before it is compared with `r`.
fn setup(f: &FixedPoints, n: u64) -> Setup {
    let stretch = (2.0 * n as f64 * f.log2_lambda)
        .ceil()
        .min(f64::from(u32::MAX / 2)) as u32;
    let bits = BASE_BITS + stretch;
    Setup {
        centers: f.points.clone().map(|v| {
            let p = rational_point(&v, bits);
            [p[0].as_rational().unwrap(), p[1].as_rational().unwrap()]
        }),
        radius: f.radius.clone(),
    }
}

fn maps_for(a: &RingMat2, b: &RingMat2, n: u64) -> Result<[RingMat2; 4]> {
    let an = a.pow_u(n);
    let bn = b.pow_u(n);
    let ain = an.mat_inv()?;
    let bin = bn.mat_inv()?;
    Ok([an, ain, bn, bin])
}

struct CellCheck {
    ok: bool,
    cell: CoverCell,
}

fn check_cell(idx: usize, x: &RingMat2, centers: &[[Rational; 2]; 4], r: &Rational) -> CellCheck {
    let ex = EXCLUDED[idx];
    let r2 = r * r;
    let target = to_pt(&centers[idx]);
    let ends = endpoints(&centers[ex], r);
    let mut ok = true;
    let mut worst = 0f64;
    for e in &ends {
        let ep = to_pt(e);
        ok &= rat_sq_less(&chordal_sq(&ep, &to_pt(&centers[ex])), &r2) == Sign::Negative;
        let d2 = chordal_sq(&apply(x, &ep), &target);
        ok &= rat_sq_less(&d2, &r2) == Sign::Negative;
        worst = worst.max(Interval::of_quartic(&d2, 64).to_f64_bounds().1.sqrt());
    }
    let img_c = apply(x, &to_pt(&centers[ex]));
    ok &= rat_sq_less(&chordal_sq(&img_c, &target), &r2) == Sign::Positive;
    CellCheck {
        ok,
        cell: CoverCell {
            map: format!("{}^N", LABELS[idx]).replace("^-1^N", "^-N"),
            excluded: ex,
            target: idx,
            endpoints: ends.map(|p| p.map(|c| fmt_rational(&c))),
            image_radius_bound: worst,
        },
    }
}

fn disjoint(centers: &[[Rational; 2]; 4], r: &Rational) -> bool {
    let four = Rational::from_integer(4.into());
    let bound = &four * r * r;
    (0..4).all(|i| {
        (i + 1..4).all(|j| {
            chordal_sq(&to_pt(&centers[i]), &to_pt(&centers[j]))
                .as_rational()
                .is_some_and(|d2| d2 > bound)
        })
    })
}

fn try_exponent(a: &RingMat2, b: &RingMat2, s: &Setup, n: u64) -> Result<Option<Vec<CoverCell>>> {
    if !disjoint(&s.centers, &s.radius) {
        return Err(Error::InternalMismatch("ball radius not disjoint".into()));
    }
    let maps = maps_for(a, b, n)?;
    let mut cells = Vec::with_capacity(4);
    for (i, x) in maps.iter().enumerate() {
        let c = check_cell(i, x, &s.centers, &s.radius);
        if !c.ok {
            return Ok(None);
        }
        cells.push(c.cell);
    }
    Ok(Some(cells))
}

fn check_hypotheses(a: &RingMat2, b: &RingMat2) -> Result<()> {
    for m in [a, b] {
        if classify(m, 0)?.class != MatClass::Hyperbolic {
            return Err(Error::NotHyperbolicLike);
        }
    }
    if share_eigenvector(a, b, 0)? {
        return Err(Error::HypothesisViolated(
            "the fixed points of A and B intersect".into(),
        ));
    }
    Ok(())
}

/// Searches for the least `N` (doubling, then bisection) for which the
/// four-ball ping-pong table of `A^N, B^N` certifies. `A`, `B` are real
/// 2×2 matrices with entries read as real numbers.
pub fn pingpong_exponent(a: &RingMat2, b: &RingMat2) -> Result<PingPongCertificate> {
    check_hypotheses(a, b)?;
    let f = fixed_points(a, b)?;
    let mut lo = 0u64;
    let mut hi = 1u64;
    let (mut s, mut cells) = loop {
        let s = setup(&f, hi);
        if let Some(c) = try_exponent(a, b, &s, hi)? {
            break (s, c);
        }
        lo = hi;
        hi *= 2;
        if hi > MAX_EXPONENT {
            return Err(Error::Overflow(hi));
        }
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let at = setup(&f, mid);
        match try_exponent(a, b, &at, mid)? {
            Some(c) => {
                hi = mid;
                cells = c;
                s = at;
            }
            None => lo = mid,
        }
    }
    finish(a, b, &s, hi, cells)
}

fn finish(
    a: &RingMat2,
    b: &RingMat2,
    s: &Setup,
    n: u64,
    cells: Vec<CoverCell>,
) -> Result<PingPongCertificate> {
    let balls = (0..4)
        .map(|i| Ball {
            label: LABELS[i].to_string(),
            center: s.centers[i].clone().map(|c| fmt_rational(&c)),
            radius: fmt_rational(&s.radius),
        })
        .collect();
    let cert = PingPongCertificate {
        n,
        generators: [a.to_json(), b.to_json()],
        balls,
        cover_cells: cells,
        checked_conditions: Vec::new(),
    };
    let conditions = check_certificate(&cert)?;
    if !conditions.iter().all(|c| c.holds) {
        return Err(Error::InternalMismatch(
            "certificate failed its own check".into(),
        ));
    }
    Ok(PingPongCertificate {
        checked_conditions: conditions,
        ..cert
    })
}

/// Certificate for a prescribed exponent `n`, without searching.
pub fn pingpong_certificate_at(a: &RingMat2, b: &RingMat2, n: u64) -> Result<PingPongCertificate> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the exponent must be at least 1".into(),
        ));
    }
    check_hypotheses(a, b)?;
    let s = setup(&fixed_points(a, b)?, n);
    match try_exponent(a, b, &s, n)? {
        Some(cells) => finish(a, b, &s, n, cells),
        None => Err(Error::HypothesisViolated(format!(
            "the ping-pong table does not certify at N = {n}"
        ))),
    }
}

fn parse_rat(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidArgument(format!("bad rational {s:?}")))
}

fn parse_pair(p: &[String; 2]) -> Result<[Rational; 2]> {
    Ok([parse_rat(&p[0])?, parse_rat(&p[1])?])
}

/// Re-verifies a certificate from its data alone: equal positive radii,
/// pairwise disjoint balls, and for each map the cover-arc conditions.
pub fn check_certificate(cert: &PingPongCertificate) -> Result<Vec<CheckedCondition>> {
    if cert.n == 0 || cert.balls.len() != 4 || cert.cover_cells.len() != 4 {
        return Err(Error::InvalidArgument("malformed certificate".into()));
    }
    let a = RingMat2::from_json(&cert.generators[0])?;
    let b = RingMat2::from_json(&cert.generators[1])?;
    let mut out = Vec::new();
    let mut push = |name: String, holds: bool| out.push(CheckedCondition { name, holds });
    push(
        "generators unimodular".into(),
        a.is_unimodular() && b.is_unimodular(),
    );
    let r = parse_rat(&cert.balls[0].radius)?;
    let same_radius = cert
        .balls
        .iter()
        .map(|bl| parse_rat(&bl.radius))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|x| *x == r);
    push(
        "common positive radius below 1".into(),
        same_radius && r.is_positive() && r < Rational::one(),
    );
    let mut centers: Vec<[Rational; 2]> = Vec::new();
    for bl in &cert.balls {
        let c = parse_pair(&bl.center)?;
        if c[0].is_zero() && c[1].is_zero() {
            return Err(Error::InvalidArgument("zero ball center".into()));
        }
        centers.push(c);
    }
    let centers: [[Rational; 2]; 4] = centers.try_into().expect("four balls");
    push("balls pairwise disjoint".into(), disjoint(&centers, &r));
    let maps = maps_for(&a, &b, cert.n)?;
    for (i, x) in maps.iter().enumerate() {
        let stated = &cert.cover_cells[i];
        let c = check_cell(i, x, &centers, &r);
        let consistent = stated.excluded == EXCLUDED[i]
            && stated.target == i
            && stated.endpoints == c.cell.endpoints;
        push(
            format!(
                "{} maps the complement of ball {} into ball {}",
                c.cell.map, EXCLUDED[i], i
            ),
            c.ok && consistent,
        );
    }
    Ok(out)
}

/// `N` such that `⟨aᴺ, bᴺ⟩` is free, via the ping-pong certificate of the
/// `σ₂` views.
pub fn free_pair_power(a: &RingMat2, b: &RingMat2) -> Result<PingPongCertificate> {
    for m in [a, b] {
        if classify(m, 2)?.class != MatClass::Hyperbolic {
            return Err(Error::NotHyperbolicLike);
        }
    }
    if share_eigenvector(a, b, 2)? {
        return Err(Error::HypothesisViolated(
            "the σ₂ views share an eigenvector".into(),
        ));
    }
    pingpong_exponent(&a.real_view(2)?, &b.real_view(2)?)
}
