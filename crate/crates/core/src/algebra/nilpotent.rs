use std::ops::Deref;

use super::GradedLieAlgebra;
use crate::error::{input, Result};

/// A validated graded Lie algebra concentrated in negative degrees, hence
/// nilpotent, and generated by its degree −1 part.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentGradedAlgebra(GradedLieAlgebra);

impl NilpotentGradedAlgebra {
    pub fn new(g: GradedLieAlgebra) -> Result<Self> {
        if let Some(i) = g.degrees().iter().position(|d| *d >= 0) {
            return input(format!(
                "{}: basis element {i} has nonnegative degree {}",
                g.name(),
                g.degree(i)
            ));
        }
        g.require_valid()?;
        Ok(NilpotentGradedAlgebra(g))
    }

    /// `g₋` of a validated graded algebra.
    pub fn negative_part_of(g: &GradedLieAlgebra) -> Result<Self> {
        g.require_valid()?;
        Self::new(g.negative_part())
    }

    pub fn into_inner(self) -> GradedLieAlgebra {
        self.0
    }
}

impl Deref for NilpotentGradedAlgebra {
    type Target = GradedLieAlgebra;

    fn deref(&self) -> &GradedLieAlgebra {
        &self.0
    }
}
