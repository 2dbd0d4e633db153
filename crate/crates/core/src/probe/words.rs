//! Freely reduced words in two generators and their exact evaluation.

use crate::construction::paper_generators;
use crate::error::{Error, Result};
use crate::linalg::RingMat2;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    F,
    FInv,
    G,
    GInv,
}

pub const LETTERS: [Letter; 4] = [Letter::F, Letter::FInv, Letter::G, Letter::GInv];

impl Letter {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn inverse(self) -> Letter {
        LETTERS[self.index() ^ 1]
    }

    fn token(self) -> &'static str {
        match self {
            Letter::F => "f",
            Letter::FInv => "f^-1",
            Letter::G => "g",
            Letter::GInv => "g^-1",
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    /// Fails with `InvalidArgument` if two adjacent letters cancel.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.windows(2).any(|w| w[1] == w[0].inverse()) {
            return Err(Error::InvalidArgument("word is not freely reduced".into()));
        }
        Ok(ReducedWord(letters))
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(letters: &[Letter]) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ReducedWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        ReducedWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Self::reduce(&v)
    }

    /// Parses space-separated tokens `f`, `f^-1` (or `F`), `g`, `g^-1` (or
    /// `G`); `e` or an empty string is the identity.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for tok in s.split_whitespace() {
            pos = s[pos..].find(tok).map_or(pos, |i| pos + i);
            let l = match tok {
                "f" => Letter::F,
                "f^-1" | "F" => Letter::FInv,
                "g" => Letter::G,
                "g^-1" | "G" => Letter::GInv,
                "e" => continue,
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unknown letter {tok:?}"),
                    })
                }
            };
            letters.push(l);
        }
        Self::new(letters)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let toks: Vec<&str> = self.0.iter().map(|l| l.token()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `1 + Σ_{k=1..L} 4·3^{k−1}`.
pub fn word_count(l: u32) -> u64 {
    (1..=l).map(|k| 4 * 3u64.pow(k - 1)).sum::<u64>() + 1
}

/// Every freely reduced word of length `≤ l`, shortest first, then in
/// letter order `f < f⁻¹ < g < g⁻¹`.
pub fn enumerate_words(l: u32) -> impl Iterator<Item = ReducedWord> {
    let mut level = vec![ReducedWord::empty()];
    let mut k = 0;
    std::iter::from_fn(move || {
        if level.is_empty() {
            return None;
        }
        let out = std::mem::take(&mut level);
        if k < l {
            level = out
                .iter()
                .flat_map(|w| {
                    LETTERS
                        .iter()
                        .filter(move |&&x| w.0.last() != Some(&x.inverse()))
                        .map(move |&x| {
                            let mut v = w.0.clone();
                            v.push(x);
                            ReducedWord(v)
                        })
                })
                .collect();
        }
        k += 1;
        Some(out)
    })
    .flatten()
}

/// Generators and their inverses, indexed by [`Letter::index`].
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub mats: [RingMat2; 4],
}

impl GeneratorSet {
    pub fn new(a: &RingMat2, b: &RingMat2) -> Result<Self> {
        if !a.is_unimodular() || !b.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(GeneratorSet {
            mats: [a.clone(), a.mat_inv()?, b.clone(), b.mat_inv()?],
        })
    }

    /// `f ↦ Pᴺ`, `g ↦ Qᴺ`.
    pub fn paper(n: u64) -> Result<Self> {
        let (p, q) = paper_generators();
        Self::new(&p.pow_u(n), &q.pow_u(n))
    }

    pub fn evaluate(&self, w: &ReducedWord) -> RingMat2 {
        w.0.iter().fold(RingMat2::identity(), |acc, l| {
            acc.mat_mul(&self.mats[l.index()])
        })
    }

    /// Depth-first walk over all nonempty reduced words of length `≤ l`,
    /// split by first letter. Each partition folds into its own
    /// accumulator; the four accumulators come back in letter order.
    pub fn walk<T, I, V>(&self, l: u32, init: I, visit: V) -> Vec<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, &[Letter], &RingMat2) + Sync,
    {
        LETTERS
            .par_iter()
            .map(|&first| {
                let mut acc = init();
                if l == 0 {
                    return acc;
                }
                let mut word = vec![first];
                let mut stack = vec![self.mats[first.index()].clone()];
                visit(&mut acc, &word, &stack[0]);
                // per-depth index of the next letter to try
                let mut next = vec![0usize];
                while let Some(i) = next.last_mut() {
                    if word.len() as u32 >= l || *i >= 4 {
                        next.pop();
                        word.pop();
                        stack.pop();
                        continue;
                    }
                    let x = LETTERS[*i];
                    *i += 1;
                    if x == word.last().expect("nonempty").inverse() {
                        continue;
                    }
                    let m = stack
                        .last()
                        .expect("nonempty")
                        .mat_mul(&self.mats[x.index()]);
                    word.push(x);
                    visit(&mut acc, &word, &m);
                    stack.push(m);
                    next.push(0);
                }
                acc
            })
            .collect()
    }
}

/// `f ↦ Pᴺ`, `g ↦ Qᴺ`, evaluated exactly.
pub fn evaluate_word(w: &ReducedWord, n: u64) -> Result<RingMat2> {
    Ok(GeneratorSet::paper(n)?.evaluate(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for l in 0..6 {
            let words: Vec<_> = enumerate_words(l).collect();
            assert_eq!(words.len() as u64, word_count(l));
            let set: std::collections::HashSet<_> = words.iter().collect();
            assert_eq!(set.len(), words.len());
        }
        assert_eq!(word_count(3), 53);
    }

    #[test]
    fn walk_visits_every_word_once() {
        let g = GeneratorSet::paper(1).unwrap();
        let parts = g.walk(4, Vec::new, |acc: &mut Vec<ReducedWord>, w, m| {
            let rw = ReducedWord(w.to_vec());
            assert_eq!(&g.evaluate(&rw), m);
            acc.push(rw);
        });
        let all: Vec<_> = parts.into_iter().flatten().collect();
        assert_eq!(all.len() as u64, word_count(4) - 1);
    }

    #[test]
    fn parse_and_display() {
        let w = ReducedWord::parse("f g f^-1 G").unwrap();
        assert_eq!(w.to_string(), "f g f^-1 g^-1");
        assert_eq!(w.inverse().to_string(), "g f g^-1 f^-1");
        assert!(ReducedWord::parse("f F").is_err());
        assert!(matches!(
            ReducedWord::parse("f h"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn commutator_word() {
        let (p, q) = paper_generators();
        let w = ReducedWord::parse("f g f^-1 g^-1").unwrap();
        let m = evaluate_word(&w, 1).unwrap();
        assert_eq!(m, RingMat2::commutator(&p, &q).unwrap());
        assert!(!m.is_identity());
        assert_eq!(
            evaluate_word(&ReducedWord::empty(), 3).unwrap(),
            RingMat2::identity()
        );
    }
}
