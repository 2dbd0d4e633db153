//! Exact arithmetic in `Z[2^(1/4)]` and the tools built on it: Galois views,
//! 2×2 matrix classification, regular representations, projective dynamics,
//! ping-pong freeness certificates and discreteness probes for two-generator
//! subgroups of `SL(2,R) × SL(2,C)`.

pub mod cli;
pub mod construction;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod probe;
pub mod projective;
pub mod ring;

pub use error::{Error, Result};
