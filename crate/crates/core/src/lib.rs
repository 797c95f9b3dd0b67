//! Quiver coefficients of Dynkin type A, Schur calculus, double Schubert
//! polynomials and Stanley symmetric functions.

pub mod cli;
pub mod error;
pub mod factorseq;
pub mod lr;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod quiver;
pub mod schubert;
pub mod schur;
pub mod stanley;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, Rectangle};
pub use perm::Permutation;
pub use poly::Polynomial;
pub use quiver::RankConditions;
pub use schur::{PartitionTuple, SchurElement, TensorElement};
pub use tableau::Tableau;
