//! Thin wrappers that turn library calls into [`Report`]s.

use super::report::{Report, Verdict};
use crate::construction::paper_generators;
use crate::construction::{
    conjugation_record, inequality_probe, InequalityParams, PROBED_INEQUALITIES,
};
use crate::error::{Error, Result};
use crate::limits::{check_limit_conditions, paper_q, search_limit_candidates, LimitTargets};
use crate::linalg::{classify, regular_rep, regular_rep_cubic, CubicMat2, RatMatrix, RingMat2};
use crate::probe::{margin_profile, WordFamily};
use crate::projective::{check_certificate, free_pair_power, pingpong_certificate_at};
use crate::ring::{fmt_rational, parse_rational, CubicElem, Rational};
use serde::Deserialize;

fn class_name(c: crate::linalg::MatClass) -> String {
    format!("{c:?}").to_lowercase()
}

fn row_string(m: &RatMatrix, i: usize) -> String {
    m.row(i)
        .iter()
        .map(fmt_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn classify_cmd(a: &RingMat2, k: Option<usize>) -> Result<Report> {
    let mut rep = Report::new("classify");
    rep.input("matrix", a.to_string());
    rep.input("k", k);
    let ks: Vec<usize> = k.map_or((0..4).collect(), |k| vec![k]);
    for k in ks {
        let c = classify(a, k)?;
        let trace = c.trace.re_interval(64);
        let e = rep.push(
            &format!("sigma{k}"),
            Verdict::Pass,
            class_name(c.class),
            "classification of the embeddings",
        );
        if c.trace.is_real() {
            e.detail(format!("trace in {trace}"));
        } else {
            e.detail(format!(
                "trace has real part in {trace} and imaginary part in {}",
                c.trace.im_interval(64)
            ));
        }
    }
    Ok(rep)
}

/// Parses `"c0 c1 c2; …"` with three rationals per entry.
pub fn parse_cubic(s: &str) -> Result<CubicMat2> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 4 {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected 4 entries separated by ';', found {}", parts.len()),
        });
    }
    let mut offset = 0;
    let mut e = Vec::with_capacity(4);
    for p in parts {
        let mut c = Vec::with_capacity(3);
        let mut pos = offset;
        for tok in p.split(' ') {
            if !tok.is_empty() {
                let r = parse_rational(tok).ok_or_else(|| Error::Parse {
                    pos,
                    msg: format!("invalid rational '{tok}'"),
                })?;
                c.push(r);
            }
            pos += tok.len() + 1;
        }
        let [a, m, q]: [Rational; 3] = c.try_into().map_err(|v: Vec<Rational>| Error::Parse {
            pos: offset,
            msg: format!("expected 3 coefficients, found {}", v.len()),
        })?;
        e.push(CubicElem::new(a, m, q));
        offset += p.len() + 1;
    }
    let m = CubicMat2 {
        e: e.try_into().expect("four entries"),
    };
    if !m.det().is_one() {
        return Err(Error::NotUnimodular);
    }
    Ok(m)
}

pub fn repr_cmd(matrix: &str, kappa: u32) -> Result<Report> {
    let mut rep = Report::new("repr");
    rep.input("matrix", matrix);
    rep.input("kappa", kappa);
    let r = match kappa {
        3 => regular_rep_cubic(&parse_cubic(matrix)?),
        _ => regular_rep(&RingMat2::parse(matrix)?, kappa)?,
    };
    for i in 0..2 * kappa as usize {
        rep.push(
            &format!("row_{}", i + 1),
            Verdict::Pass,
            row_string(&r.m, i),
            "regular representation",
        );
    }
    Ok(rep)
}

/// `N` from the ping-pong certificate of the construction's generators.
pub fn certified_n() -> Result<u64> {
    let (p, q) = paper_generators();
    Ok(free_pair_power(&p, &q)?.n)
}

pub fn margin_cmd(n: Option<u64>, l: u32, cap: u32) -> Result<Report> {
    let n = match n {
        Some(n) => n,
        None => certified_n()?,
    };
    let mut rep = Report::new("margin");
    rep.input("N", n);
    rep.input("L", l);
    let profile = margin_profile(&WordFamily::gamma(n)?, l, cap, &crate::ring::ratio(1, 100))?;
    for r in &profile {
        let positive = r.margin.lo > Rational::from_integer(0.into());
        rep.push(
            &format!("margin_L{}", r.l),
            Verdict::of(positive),
            r.margin.clone(),
            "discreteness margin",
        )
        .detail(format!(
            "witness {}, {} words, {} ties",
            r.witness,
            r.words,
            r.ties.len()
        ));
    }
    let monotone = profile
        .windows(2)
        .all(|w| w[1].margin_sq.cmp_exact(&w[0].margin_sq).is_le());
    rep.push(
        "margin_monotone",
        Verdict::of(monotone),
        monotone.to_string(),
        "discreteness margin",
    );
    if let Some(last) = profile.last() {
        let rows = last.escape_rows.len();
        rep.push("escape", Verdict::of(last.escape_holds()), format!("{rows} near-identity words"), "escape through sigma_2")
            .detail("every word within eps of I in both views has an entry difference with N >= 1 in sigma_2");
    }
    Ok(rep)
}

pub fn certify_cmd(n: Option<u64>) -> Result<Report> {
    let (p, q) = paper_generators();
    let mut rep = Report::new("certify");
    rep.input("N", n);
    let cert = match n {
        Some(n) => pingpong_certificate_at(&p.real_view(2)?, &q.real_view(2)?, n),
        None => free_pair_power(&p, &q),
    };
    let cert = match cert {
        Ok(c) => c,
        Err(e @ (Error::HypothesisViolated(_) | Error::Overflow(_))) => {
            rep.push(
                "certificate",
                Verdict::Fail,
                e.to_string(),
                "ping-pong certificate",
            );
            return Ok(rep);
        }
        Err(e) => return Err(e),
    };
    rep.push(
        "N",
        Verdict::Pass,
        cert.n.to_string(),
        "ping-pong certificate",
    );
    for c in check_certificate(&cert)? {
        rep.push(
            &c.name,
            Verdict::of(c.holds),
            c.holds.to_string(),
            "ping-pong certificate",
        );
    }
    let compact = serde_json::to_string(&cert).expect("certificate serializes");
    rep.push(
        "certificate",
        Verdict::Pass,
        compact,
        "ping-pong certificate",
    );
    Ok(rep)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TargetsFile {
    u: Vec<Vec<String>>,
    v: Vec<Vec<String>>,
}

/// Reads `{"u": [[..4 rationals..] x4], "v": …}`.
pub fn parse_targets(text: &str) -> Result<LimitTargets> {
    let t: TargetsFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    LimitTargets::new(RingMat2::from_json(&t.u)?, RingMat2::from_json(&t.v)?)
}

pub fn search_cmd(bound: u32, count: usize, targets: Option<LimitTargets>) -> Result<Report> {
    let targets = targets.unwrap_or_else(LimitTargets::default_targets);
    let q = paper_q();
    let mut rep = Report::new("search");
    rep.input("bound", bound);
    rep.input("count", count);
    rep.input("u", targets.u.to_string());
    rep.input("v", targets.v.to_string());
    let found = search_limit_candidates(bound, &targets, &q, count)?;
    for (i, c) in found.iter().enumerate() {
        let r = check_limit_conditions(c, &targets, &q)?;
        let ok = r.holds("iv") && r.holds("viii");
        let total: f64 = r.residuals.sigma2.iter().map(|x| x.to_f64_mid()).sum();
        rep.push(
            &format!("candidate_{}", i + 1),
            Verdict::of(ok),
            c.p_n.to_string(),
            "limit conditions (iv), (viii)",
        )
        .detail(format!("sigma_2 residual sum ~ {total:.6}"));
    }
    if found.is_empty() {
        rep.push(
            "candidates",
            Verdict::ProbeOnly,
            "none",
            "limit conditions (iv), (viii)",
        );
    }
    Ok(rep)
}

pub fn conjugate_cmd(a: &RingMat2, n: i64) -> Result<Report> {
    if !a.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let mut rep = Report::new("conjugate");
    rep.input("matrix", a.to_string());
    rep.input("n", n);
    let r = conjugation_record(a, n)?;
    let anchor = "conjugation by Q^n";
    for (name, x) in [
        ("a_n", &r.a_n),
        ("b_n", &r.b_n),
        ("c_n", &r.c_n),
        ("d_n", &r.d_n),
    ] {
        rep.push(
            name,
            Verdict::Pass,
            format!("{} + {}*sqrt2", fmt_rational(&x.u), fmt_rational(&x.v)),
            anchor,
        );
    }
    rep.push("conjugate", Verdict::Pass, r.direct.to_string(), anchor);
    rep.push(
        "closed_form",
        Verdict::of(r.closed_form_matches),
        r.closed_form_matches.to_string(),
        anchor,
    );
    match &r.delta {
        Some(d) => {
            rep.push(
                "delta_expansions",
                Verdict::of(d.entries_match),
                d.entries_match.to_string(),
                anchor,
            );
            rep.push(
                "gamma_delta_split",
                Verdict::of(d.decomposition_matches),
                d.decomposition_matches.to_string(),
                anchor,
            );
            rep.push(
                "s1_difference",
                Verdict::of(d.difference_identity),
                d.difference_identity.to_string(),
                anchor,
            );
        }
        None => {
            rep.push("delta_expansions", Verdict::ProbeOnly, "skipped", anchor)
                .detail("some entry among zeta-1, eta, mu, nu-1 is unsigned");
        }
    }
    Ok(rep)
}

pub fn probe_inequality_cmd(a: &RingMat2, which: Option<u32>) -> Result<Report> {
    let mut rep = Report::new("probe-inequality");
    rep.input("matrix", a.to_string());
    rep.input("which", which);
    let list: Vec<u32> = which.map_or(PROBED_INEQUALITIES.to_vec(), |w| vec![w]);
    let params = InequalityParams::default();
    for w in list {
        let r = inequality_probe(a, w, &params)?;
        let anchor = format!("inequality ({w})");
        for c in &r.checks {
            rep.push(
                &format!("ineq{w}_{}", c.label),
                Verdict::ProbeOnly,
                c.lhs.clone(),
                &anchor,
            )
            .detail(format!("rhs {}, holds {}", c.rhs, c.holds));
        }
        rep.push(
            &format!("ineq{w}"),
            Verdict::ProbeOnly,
            r.holds.to_string(),
            &anchor,
        )
        .detail(format!("checks combined with '{}'", r.combine));
    }
    Ok(rep)
}
