use super::words::{GeneratorSet, Letter, ReducedWord};
use crate::construction::paper_generators;
use crate::error::{Error, Result};
use crate::linalg::RingMat2;
use crate::projective::{free_pair_power, pingpong_certificate_at, PingPongCertificate};
use serde::Serialize;

pub const CROSS_CHECK_LENGTH: u32 = 8;

#[derive(Debug, Clone, Serialize)]
pub struct FreenessCertificate {
    #[serde(rename = "N")]
    pub n: u64,
    /// Ping-pong table for `σ₂(P)ᴺ, σ₂(Q)ᴺ`.
    pub pingpong: PingPongCertificate,
    pub cross_check_length: u32,
    pub words_checked: u64,
    /// Words of length `≤ cross_check_length` that evaluate to `±I`.
    pub trivial_words: Vec<ReducedWord>,
}

impl FreenessCertificate {
    pub fn holds(&self) -> bool {
        self.trivial_words.is_empty() && self.pingpong.checked_conditions.iter().all(|c| c.holds)
    }
}

/// Nonempty words of length `≤ l` evaluating to `±I`, and the number checked.
pub fn trivial_words(gens: &GeneratorSet, l: u32) -> (Vec<ReducedWord>, u64) {
    let parts = gens.walk(
        l,
        || (Vec::new(), 0u64),
        |acc: &mut (Vec<ReducedWord>, u64), w: &[Letter], m: &RingMat2| {
            acc.1 += 1;
            if m.is_identity() || m.is_neg_identity() {
                acc.0.push(ReducedWord::new(w.to_vec()).expect("reduced"));
            }
        },
    );
    let mut found = Vec::new();
    let mut count = 0;
    for (f, c) in parts {
        found.extend(f);
        count += c;
    }
    (found, count)
}

fn cross_check(pingpong: PingPongCertificate, l: u32) -> Result<FreenessCertificate> {
    let n = pingpong.n;
    let (found, words_checked) = trivial_words(&GeneratorSet::paper(n)?, l);
    Ok(FreenessCertificate {
        n,
        pingpong,
        cross_check_length: l,
        words_checked,
        trivial_words: found,
    })
}

/// Certifies `⟨Pᴺ, Qᴺ⟩` free at the given `N` through the `σ₂` ping-pong
/// table, then evaluates every word up to length 8 exactly.
pub fn freeness_certificate(n: u64) -> Result<FreenessCertificate> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let (p, q) = paper_generators();
    let cert = pingpong_certificate_at(&p.sigma2(), &q.sigma2(), n)?;
    cross_check(cert, CROSS_CHECK_LENGTH)
}

/// As [`freeness_certificate`], with the least `N` the ping-pong search finds.
pub fn freeness_certificate_auto() -> Result<FreenessCertificate> {
    let (p, q) = paper_generators();
    cross_check(free_pair_power(&p, &q)?, CROSS_CHECK_LENGTH)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_rejected() {
        assert!(matches!(
            freeness_certificate(0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn finds_relations_in_a_non_free_pair() {
        let a = RingMat2::from_ints(0, 1, -1, 0);
        let gens = GeneratorSet::new(&a, &a).unwrap();
        let (found, count) = trivial_words(&gens, 2);
        assert_eq!(count, 16);
        assert!(found.iter().any(|w| w.to_string() == "f f"));
        assert!(found.iter().any(|w| w.to_string() == "f g^-1"));
    }
}
