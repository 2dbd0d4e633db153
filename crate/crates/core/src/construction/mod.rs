//! The concrete generators `P`, `Q`, the conditions they satisfy, and the
//! closed-form conjugation identities for `Qⁿ σ₂(A) Q⁻ⁿ`.

mod chebyshev;
mod conditions;
mod conjugation;
mod generators;
mod inequalities;

pub use chebyshev::{
    chebyshev, chebyshev_table, pell_divergence, ChebyshevPair, PellReport, PellRow,
};
pub use conditions::{check_conditions, ConditionReport};
pub use conjugation::{
    conjugation_record, l_inv_squared, l_squared, lambda_sum, lucas_t, q_power_entries,
    ConjugationRecord, DeltaTerms,
};
pub use generators::{paper_generators, GammaGenerators};
pub use inequalities::{
    inequality_probe, reference_slope, InequalityCheck, InequalityParams, InequalityRecord,
    PROBED_INEQUALITIES,
};
