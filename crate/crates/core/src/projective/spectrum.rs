//! Spectra of `Ψ(A)` through its four 2×2 blocks `σ_k(A)`.

use crate::error::Result;
use crate::linalg::{regular_rep, RingMat2};
use crate::ring::{galois, EmbeddedComplex, Interval, QuadExt, QuarticElem, Rational, Sign};
use serde::Serialize;
use std::cmp::Ordering;

/// Which matrix a spectral question is about.
#[derive(Debug, Clone)]
pub enum SpectralSource {
    /// The 8×8 matrix `Ψ(A)`.
    Psi(RingMat2),
    /// A real 2×2 matrix (entries read as real numbers of `Q[β]`).
    Real2(RingMat2),
}

impl SpectralSource {
    pub fn matrix(&self) -> &RingMat2 {
        match self {
            SpectralSource::Psi(m) | SpectralSource::Real2(m) => m,
        }
    }

    pub fn blocks(&self) -> &'static [usize] {
        match self {
            SpectralSource::Psi(_) => &[0, 1, 2, 3],
            SpectralSource::Real2(_) => &[0],
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SpectralSource::Psi(_) => 8,
            SpectralSource::Real2(_) => 2,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            SpectralSource::Psi(m) => SpectralSource::Psi(m.mat_inv()?),
            SpectralSource::Real2(m) => SpectralSource::Real2(m.mat_inv()?),
        })
    }
}

/// `(|r| + 1/|r|)²` for the eigenvalues `r, 1/r` of a unimodular block with
/// trace `s`. It is monotone in the spectral radius, so comparing keys
/// compares the largest eigenvalue moduli.
///
/// For real `s` it is `max(4, s²)`; in general it is the larger root of
/// `u² − (4 + |s|²)u + 4·Re(s)²`.
pub fn block_key(trace: &EmbeddedComplex) -> QuadExt {
    let zero = QuarticElem::zero();
    if trace.is_real() {
        let s2 = &trace.re * &trace.re;
        let four = QuarticElem::from_int(4);
        let k = if s2.cmp_exact(&four) == Ordering::Greater {
            s2
        } else {
            four
        };
        return QuadExt::from_base(k, &zero);
    }
    let a = &trace.re;
    let big = &QuarticElem::from_int(4) + &trace.norm_sq();
    let disc = &(&big * &big) - &(a * a).scale_int(16);
    let half = QuarticElem::from_rational(Rational::new(1.into(), 2.into()));
    QuadExt::new(&big * &half, half, disc)
}

/// Exact sign of `(x + a√p) − (y + b√q)` with `a, b ≥ 0`.
pub fn compare_keys(k1: &QuadExt, k2: &QuadExt) -> Ordering {
    let y = QuadExt::new(&k1.u - &k2.u, k1.v.clone(), k1.d.clone());
    let b = &k2.v;
    if b.is_zero() || k2.d.is_zero() {
        return y.sign().to_ordering();
    }
    match y.sign() {
        Sign::Negative | Sign::Zero => Ordering::Less,
        Sign::Positive => {
            // both sides positive: compare squares
            let y2 = &y * &y;
            let rhs = QuadExt::from_base(&(b * b) * &k2.d, &y.d);
            (&y2 - &rhs).sign().to_ordering()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockInfo {
    pub k: usize,
    pub trace: String,
    pub key: Interval,
    pub real: bool,
}

/// A dominant eigenvalue: real, simple and strictly larger in modulus than
/// 1 and every other eigenvalue.
#[derive(Debug, Clone)]
pub struct Dominant {
    /// Index of the 2×2 block carrying it (always a real embedding).
    pub block: usize,
    pub lambda: QuadExt,
    pub lambda_interval: Interval,
    pub blocks: Vec<BlockInfo>,
}

fn block_trace(src: &SpectralSource, k: usize) -> EmbeddedComplex {
    galois(&src.matrix().trace(), k)
}

/// Per-block traces and keys.
pub fn block_table(src: &SpectralSource) -> Vec<(usize, EmbeddedComplex, QuadExt)> {
    src.blocks()
        .iter()
        .map(|&k| {
            let t = block_trace(src, k);
            let key = block_key(&t);
            (k, t, key)
        })
        .collect()
}

/// The dominant eigenvalue, if one exists. Assumes `det = 1`.
pub fn dominant_eigenvalue(src: &SpectralSource) -> Option<Dominant> {
    let table = block_table(src);
    let infos: Vec<BlockInfo> = table
        .iter()
        .map(|(k, t, key)| BlockInfo {
            k: *k,
            trace: t.to_string(),
            key: key.interval(64),
            real: t.is_real(),
        })
        .collect();
    let mut best = 0;
    for i in 1..table.len() {
        if compare_keys(&table[i].2, &table[best].2) == Ordering::Greater {
            best = i;
        }
    }
    let (k, t, key) = &table[best];
    for (i, other) in table.iter().enumerate() {
        if i != best && compare_keys(key, &other.2) != Ordering::Greater {
            return None;
        }
    }
    let four = QuadExt::from_base(QuarticElem::from_int(4), &QuarticElem::zero());
    if compare_keys(key, &four) != Ordering::Greater || !t.is_real() {
        return None;
    }
    let s = &t.re;
    let disc = &(s * s) - &QuarticElem::from_int(4);
    let half = QuarticElem::from_rational(Rational::new(1.into(), 2.into()));
    let sv = if s.sign().is_negative() {
        -&half
    } else {
        half.clone()
    };
    let lambda = QuadExt::new(s * &half, sv, disc);
    Some(Dominant {
        block: *k,
        lambda_interval: lambda.interval(64),
        lambda,
        blocks: infos,
    })
}

/// Multiplies polynomials with complex coefficients (lowest degree first).
fn poly_mul(a: &[EmbeddedComplex], b: &[EmbeddedComplex]) -> Vec<EmbeddedComplex> {
    let mut out = vec![EmbeddedComplex::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `∏_k det(x I − σ_k(A))`, recombined to rational coefficients.
pub fn blockwise_charpoly(a: &RingMat2) -> Option<Vec<Rational>> {
    let mut acc = vec![EmbeddedComplex::one()];
    for k in 0..4 {
        let t = galois(&a.trace(), k);
        let d = galois(&a.det(), k);
        acc = poly_mul(&acc, &[d, -&t, EmbeddedComplex::one()]);
    }
    acc.iter()
        .map(|c| {
            if c.is_real() {
                c.re.as_rational()
            } else {
                None
            }
        })
        .collect()
}

/// Checks that the characteristic polynomial of `Ψ(A)` is the product of
/// those of the four embedded blocks.
pub fn spectrum_matches(a: &RingMat2) -> Result<bool> {
    let direct = regular_rep(a, 4)?.m.charpoly();
    Ok(blockwise_charpoly(a).is_some_and(|p| p == direct))
}

impl Dominant {
    pub fn lambda_abs_gt_one(&self) -> bool {
        let one = QuadExt::from_base(QuarticElem::one(), &self.lambda.d);
        (&self.lambda.abs() - &one).sign() == Sign::Positive
    }
}
