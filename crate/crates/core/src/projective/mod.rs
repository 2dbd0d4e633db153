//! Projective dynamics: dominant eigenvalues, hyperbolic-like matrices and
//! ping-pong certificates.

mod dynamics;
mod pingpong;
mod point;
mod spectrum;

pub use dynamics::{hyperbolic_like, noncommuting_check, HyperbolicLikeData, NoncommutingReport};
pub use pingpong::{
    check_certificate, free_pair_power, pingpong_certificate_at, pingpong_exponent, Ball,
    CheckedCondition, CoverCell, PingPongCertificate, MAX_EXPONENT,
};
pub use point::{chordal_sq, proj_dist, ProjPoint};
pub use spectrum::{
    block_key, block_table, blockwise_charpoly, compare_keys, dominant_eigenvalue,
    spectrum_matches, BlockInfo, Dominant, SpectralSource,
};
