//! Word enumeration, freeness certificates, discreteness margins and the
//! torsion and dual-smallness probes.

mod freeness;
mod margin;
mod torsion;
mod words;

pub use freeness::{
    freeness_certificate, freeness_certificate_auto, trivial_words, FreenessCertificate,
    CROSS_CHECK_LENGTH,
};
pub use margin::{
    discreteness_margin, dual_smallness_scan, embedded_sq, margin_profile, sq_dist_to_identity,
    DualRow, DualTable, EscapeRow, MarginReport, WordFamily, DEFAULT_DEPTH_CAP,
};
pub use torsion::{torsion_probe, TorsionReport, TorsionResult};
pub use words::{
    enumerate_words, evaluate_word, word_count, GeneratorSet, Letter, ReducedWord, LETTERS,
};
