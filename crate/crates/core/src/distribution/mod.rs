//! Bracket-generating distributions spanned by polynomial vector fields:
//! derived flags, symbol algebras, flat models and genericity.

mod classify;
mod growth;
mod model;
mod poly;

pub use classify::{classify_rank4, genericity_test, levi_rank, GenericityReport, Rank4Report, Rank4Type, SymbolFamily};
pub use growth::{growth_vector_at, symbol_at, GrowthVector, SymbolAlgebra};
pub use model::{bernoulli, model_fields, psi_coefficients};
pub use poly::{field_bracket, FieldsJson, Poly, PolyVectorField, TermJson};
