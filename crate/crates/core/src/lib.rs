//! Exact computations with graded semisimple Lie algebras: construction,
//! Lie algebra cohomology, Tanaka prolongation, graded subalgebras and the
//! symbol algebras of bracket-generating distributions.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cohomology;
pub mod distribution;
pub mod error;
pub mod linalg;
pub mod prolongation;
pub mod rational;
pub mod reproduce;
pub mod subalgebra;

pub use error::{Error, Result};
