//! 2×2 matrices over `Q[β]`, exact classification under each embedding,
//! eigen-data, and the regular representations `Φ_κ`.

mod classify;
mod eigen;
mod mat2;
mod regular;

pub use classify::{class_of_real_trace, classify, Classification, MatClass};
pub use eigen::{
    eigen2, eigen_resultant, eigenvector, real_eigen, share_eigenvector, Eigen2, RealEigen,
};
pub use mat2::{EmbeddedMat2, RingMat2};
pub use regular::{regular_rep, regular_rep_cubic, CubicMat2, RatMatrix, RegularRep};
