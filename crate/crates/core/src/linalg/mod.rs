//! Exact linear algebra.

pub mod charpoly;
pub mod echelon;
pub mod field;
pub mod fraction_free;
pub mod matrix;
pub mod modular;
pub mod signature;
pub mod sparse;
pub mod subspace;

pub use echelon::Echelon;
pub use field::{q, qf, Field, Fp, GaussQ, Q};
pub use matrix::{Matrix, RatMatrix};
pub use signature::signature;
pub use sparse::SparseVec;
pub use subspace::{Subspace, SubspaceOps};
