//! Discreteness margins and the dual-smallness table.

use super::words::{GeneratorSet, Letter, ReducedWord};
use crate::construction::paper_generators;
use crate::error::{Error, Result};
use crate::linalg::RingMat2;
use crate::ring::{field_quantity_n, fmt_rational, galois, ratio, Interval, QuarticElem, Rational};
use num_traits::One;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use std::cmp::Ordering;

pub const DEFAULT_DEPTH_CAP: u32 = 12;
const PREC: u32 = 64;

/// Words in two generators, read through two embeddings (the product
/// metric) plus a third embedding where near-identity words must escape.
#[derive(Debug, Clone)]
pub struct WordFamily {
    pub gens: GeneratorSet,
    pub n: u64,
    pub views: [usize; 2],
    pub escape: usize,
}

impl WordFamily {
    /// `⟨(Pᴺ, σ₁(Pᴺ)), (Qᴺ, σ₁(Qᴺ))⟩`, escaping in `σ₂`.
    pub fn gamma(n: u64) -> Result<Self> {
        let (p, q) = paper_generators();
        Self::new(&p, &q, n, [0, 1], 2)
    }

    pub fn new(
        a: &RingMat2,
        b: &RingMat2,
        n: u64,
        views: [usize; 2],
        escape: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        for k in views.iter().chain([&escape]) {
            if *k > 3 {
                return Err(Error::BadEmbedding(*k));
            }
        }
        Ok(WordFamily {
            gens: GeneratorSet::new(&a.pow_u(n), &b.pow_u(n))?,
            n,
            views,
            escape,
        })
    }
}

/// Entry differences of `W − I`.
fn differences(w: &RingMat2) -> [QuarticElem; 4] {
    let one = QuarticElem::one();
    [&w.e11 - &one, w.e12.clone(), w.e21.clone(), &w.e22 - &one]
}

/// `|σ_k(x)|²` as an element of `Q[β]` (read as a real number).
pub fn embedded_sq(x: &QuarticElem, k: usize) -> QuarticElem {
    match k {
        0 => x * x,
        2 => {
            let s = x.sigma2();
            &s * &s
        }
        _ => galois(x, k).norm_sq(),
    }
}

fn max_exact(v: impl IntoIterator<Item = QuarticElem>) -> QuarticElem {
    v.into_iter()
        .reduce(|a, b| {
            if b.cmp_exact(&a) == Ordering::Greater {
                b
            } else {
                a
            }
        })
        .expect("nonempty")
}

/// `d(σ_k(W), I)²` with `d` the entrywise max metric.
pub fn sq_dist_to_identity(w: &RingMat2, k: usize) -> QuarticElem {
    max_exact(differences(w).iter().map(|x| embedded_sq(x, k)))
}

fn sqrt_interval(sq: &QuarticElem) -> Interval {
    Interval::of_quartic(sq, PREC).sqrt(PREC)
}

/// A word with `max(d_a, d_b) < ε` and its behaviour in the escape view.
#[derive(Debug, Clone, Serialize)]
pub struct EscapeRow {
    pub word: ReducedWord,
    pub distances: [Interval; 2],
    /// `max |σ_escape(x)|` over entry differences.
    pub escape_magnitude: Interval,
    /// Smallest `N(x)` over nonzero entry differences.
    pub min_norm: String,
    /// Every nonzero difference has `N(x) ≥ 1` and some `|σ_escape(x)| > 1`.
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct MarginReport {
    pub n: u64,
    pub l: u32,
    pub views: [usize; 2],
    pub escape: usize,
    /// `min_W max(d(σ_a W, I), d(σ_b W, I))` over nonempty words.
    pub margin: Interval,
    pub witness: ReducedWord,
    /// All minimizers (the witness first); `w` and `w⁻¹` always tie.
    pub ties: Vec<ReducedWord>,
    /// Distances of the witness in each of the three views.
    pub factors: Vec<(usize, Interval)>,
    pub words: u64,
    /// Largest coefficient bit size seen among evaluated words.
    pub max_bits: u64,
    pub escape_rows: Vec<EscapeRow>,
    pub margin_sq: QuarticElem,
}

impl MarginReport {
    pub fn escape_holds(&self) -> bool {
        self.escape_rows.iter().all(|r| r.holds)
    }
}

impl Serialize for MarginReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Factors<'a>(&'a [(usize, Interval)]);
        impl Serialize for Factors<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(&format!("s{k}"), v)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("N", &self.n)?;
        m.serialize_entry("L", &self.l)?;
        m.serialize_entry("margin", &self.margin)?;
        m.serialize_entry("witness", &self.witness)?;
        m.serialize_entry("ties", &self.ties)?;
        m.serialize_entry("factors", &Factors(&self.factors))?;
        m.serialize_entry("words", &self.words)?;
        m.serialize_entry("max_bits", &self.max_bits)?;
        m.serialize_entry("escape_rows", &self.escape_rows)?;
        m.end()
    }
}

#[derive(Clone)]
struct Best {
    key: QuarticElem,
    words: Vec<ReducedWord>,
    witness_mat: RingMat2,
}

fn merge_best(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(mut a), Some(b)) => match b.key.cmp_exact(&a.key) {
            Ordering::Less => Some(b),
            Ordering::Greater => Some(a),
            Ordering::Equal => {
                let keep_b = b.words[0] < a.words[0];
                a.words.extend(b.words);
                a.words.sort();
                if keep_b {
                    a.witness_mat = b.witness_mat;
                }
                Some(a)
            }
        },
    }
}

#[derive(Default)]
struct Acc {
    /// Best word per length, index `len − 1`.
    levels: Vec<Option<Best>>,
    near: Vec<(ReducedWord, RingMat2)>,
    max_bits: u64,
}

/// Margin reports for every depth `1..=l` from a single walk.
pub fn margin_profile(
    fam: &WordFamily,
    l: u32,
    cap: u32,
    eps: &Rational,
) -> Result<Vec<MarginReport>> {
    if l == 0 {
        return Err(Error::InvalidArgument("L must be at least 1".into()));
    }
    if l > cap {
        return Err(Error::DepthTooLarge {
            requested: l as usize,
            cap: cap as usize,
        });
    }
    let eps_sq = QuarticElem::from_rational(eps * eps);
    let [va, vb] = fam.views;
    let parts = fam.gens.walk(
        l,
        || Acc {
            levels: vec![None; l as usize],
            ..Acc::default()
        },
        |acc: &mut Acc, w: &[Letter], m: &RingMat2| {
            let key = max_exact([sq_dist_to_identity(m, va), sq_dist_to_identity(m, vb)]);
            acc.max_bits = acc.max_bits.max(m.bit_size());
            if key.cmp_exact(&eps_sq) == Ordering::Less {
                acc.near
                    .push((ReducedWord::new(w.to_vec()).expect("reduced"), m.clone()));
            }
            let slot = &mut acc.levels[w.len() - 1];
            let better = match slot {
                None => true,
                Some(b) => key.cmp_exact(&b.key) == Ordering::Less,
            };
            if better {
                *slot = Some(Best {
                    key,
                    words: vec![ReducedWord::new(w.to_vec()).expect("reduced")],
                    witness_mat: m.clone(),
                });
            } else if let Some(b) = slot {
                if key.cmp_exact(&b.key) == Ordering::Equal {
                    b.words.push(ReducedWord::new(w.to_vec()).expect("reduced"));
                }
            }
        },
    );
    let mut levels: Vec<Option<Best>> = vec![None; l as usize];
    let mut near = Vec::new();
    let mut max_bits = 0;
    for p in parts {
        for (slot, b) in levels.iter_mut().zip(p.levels) {
            *slot = merge_best(slot.take(), b);
        }
        near.extend(p.near);
        max_bits = max_bits.max(p.max_bits);
    }
    near.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let escape_rows = near
        .iter()
        .map(|(w, m)| escape_row(fam, w, m))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(l as usize);
    let mut running: Option<Best> = None;
    for (depth, level) in (1..=l).zip(levels) {
        running = merge_best(running, level);
        let best = running.clone().expect("at least four words per level");
        let mut factors: Vec<(usize, Interval)> = [fam.views[0], fam.views[1], fam.escape]
            .iter()
            .map(|&k| (k, sqrt_interval(&sq_dist_to_identity(&best.witness_mat, k))))
            .collect();
        factors.sort_by_key(|f| f.0);
        out.push(MarginReport {
            n: fam.n,
            l: depth,
            views: fam.views,
            escape: fam.escape,
            margin: sqrt_interval(&best.key),
            witness: best.words[0].clone(),
            ties: best.words.clone(),
            factors,
            words: super::words::word_count(depth) - 1,
            max_bits,
            escape_rows: escape_rows
                .iter()
                .filter(|r| r.word.len() as u32 <= depth)
                .cloned()
                .collect(),
            margin_sq: best.key,
        });
    }
    Ok(out)
}

fn escape_row(fam: &WordFamily, w: &ReducedWord, m: &RingMat2) -> Result<EscapeRow> {
    let diffs = differences(m);
    let one = QuarticElem::one();
    let mut min_norm: Option<Rational> = None;
    let mut norms_ok = true;
    for x in diffs.iter().filter(|x| !x.is_zero()) {
        let nx = field_quantity_n(x)?;
        norms_ok &= nx >= Rational::one();
        min_norm = Some(min_norm.map_or(nx.clone(), |c: Rational| c.min(nx)));
    }
    let esc = max_exact(diffs.iter().map(|x| embedded_sq(x, fam.escape)));
    Ok(EscapeRow {
        word: w.clone(),
        distances: fam.views.map(|k| sqrt_interval(&sq_dist_to_identity(m, k))),
        escape_magnitude: sqrt_interval(&esc),
        holds: min_norm.is_some() && norms_ok && esc.cmp_exact(&one) == Ordering::Greater,
        min_norm: min_norm.map_or("none".into(), |r| fmt_rational(&r)),
    })
}

/// Margin of `⟨Pᴺ, Qᴺ⟩` in the `(σ₀, σ₁)` product at depth `l`.
pub fn discreteness_margin(n: u64, l: u32) -> Result<MarginReport> {
    let fam = WordFamily::gamma(n)?;
    Ok(margin_profile(&fam, l, DEFAULT_DEPTH_CAP, &ratio(1, 100))?
        .pop()
        .expect("l ≥ 1"))
}

#[derive(Debug, Clone, Serialize)]
pub struct DualRow {
    pub word: ReducedWord,
    /// `d(σ_a(W), I)` for the first view.
    pub small: Interval,
    /// `max |σ_k(x)|` over entry differences, for the other two views.
    pub magnitudes: Vec<(usize, Interval)>,
    /// `N(x)` per nonzero entry difference.
    pub norms: Vec<String>,
    /// Each nonzero difference has `N(x) ≥ 1` and `max_k |σ_k(x)| ≥ 1`.
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualTable {
    pub n: u64,
    pub l: u32,
    pub eps: String,
    pub rows: Vec<DualRow>,
    pub all_hold: bool,
}

/// Words with `d(σ_a(W), I) < ε` and their size in the remaining views.
pub fn dual_smallness_scan(fam: &WordFamily, l: u32, eps: &Rational) -> Result<DualTable> {
    if *eps <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidArgument("ε must be positive".into()));
    }
    if l > DEFAULT_DEPTH_CAP {
        return Err(Error::DepthTooLarge {
            requested: l as usize,
            cap: DEFAULT_DEPTH_CAP as usize,
        });
    }
    let eps_sq = QuarticElem::from_rational(eps * eps);
    let small = fam.views[0];
    let parts = fam.gens.walk(
        l,
        Vec::new,
        |acc: &mut Vec<(ReducedWord, RingMat2)>, w, m| {
            if sq_dist_to_identity(m, small).cmp_exact(&eps_sq) == Ordering::Less {
                acc.push((ReducedWord::new(w.to_vec()).expect("reduced"), m.clone()));
            }
        },
    );
    let mut found: Vec<_> = parts.into_iter().flatten().collect();
    found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let one = QuarticElem::one();
    let others: Vec<usize> = [fam.views[1], fam.escape].to_vec();
    let mut rows = Vec::with_capacity(found.len());
    for (word, m) in found {
        let diffs = differences(&m);
        let mut norms = Vec::new();
        let mut holds = true;
        for x in diffs.iter().filter(|x| !x.is_zero()) {
            let nx = field_quantity_n(x)?;
            holds &= nx >= Rational::one();
            let biggest = max_exact((0..4).map(|k| embedded_sq(x, k)));
            holds &= biggest.cmp_exact(&one) != Ordering::Less;
            norms.push(fmt_rational(&nx));
        }
        rows.push(DualRow {
            word,
            small: sqrt_interval(&sq_dist_to_identity(&m, small)),
            magnitudes: others
                .iter()
                .map(|&k| (k, sqrt_interval(&sq_dist_to_identity(&m, k))))
                .collect(),
            norms,
            holds,
        });
    }
    Ok(DualTable {
        n: fam.n,
        l,
        eps: fmt_rational(eps),
        all_hold: rows.iter().all(|r| r.holds),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_one_is_min_over_generators() {
        let fam = WordFamily::gamma(1).unwrap();
        let r = &margin_profile(&fam, 1, DEFAULT_DEPTH_CAP, &ratio(1, 100)).unwrap()[0];
        let direct = fam
            .gens
            .mats
            .iter()
            .map(|m| max_exact([sq_dist_to_identity(m, 0), sq_dist_to_identity(m, 1)]))
            .reduce(|a, b| if b.cmp_exact(&a).is_lt() { b } else { a })
            .unwrap();
        assert_eq!(r.margin_sq, direct);
        assert!(r.ties.len() >= 2, "a generator and its inverse tie");
    }

    #[test]
    fn profile_is_monotone() {
        let fam = WordFamily::gamma(1).unwrap();
        let rs = margin_profile(&fam, 5, DEFAULT_DEPTH_CAP, &ratio(1, 10)).unwrap();
        for w in rs.windows(2) {
            assert_ne!(w[1].margin_sq.cmp_exact(&w[0].margin_sq), Ordering::Greater);
        }
        assert!(rs.iter().all(|r| r.escape_holds()));
        assert!(matches!(
            margin_profile(&fam, 13, DEFAULT_DEPTH_CAP, &ratio(1, 10)),
            Err(Error::DepthTooLarge {
                requested: 13,
                cap: 12
            })
        ));
    }

    #[test]
    fn dual_rows_respect_norm_bound() {
        let fam = WordFamily::gamma(1).unwrap();
        let t = dual_smallness_scan(&fam, 6, &ratio(1, 2)).unwrap();
        assert!(t.all_hold);
        assert!(t.rows.iter().all(|r| !r.word.is_empty()));
    }
}
