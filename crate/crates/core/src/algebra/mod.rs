//! Graded Lie algebras given by exact structure constants.

mod builder;
pub mod derivations;
pub mod families;
pub mod json;
mod nilpotent;
pub mod validate;

use std::collections::BTreeMap;
use std::sync::OnceLock;

pub use builder::MatrixLieBuilder;
pub use derivations::{graded_derivations, Derivations};
pub use families::{
    build_g2_split, build_so_split, build_sp21, build_sp6_split, so_b_index, so_gl_index, so_v_index, Family,
};
pub use nilpotent::NilpotentGradedAlgebra;
pub use validate::{killing_form, validate, Check, CheckStatus, ValidationReport};

use crate::error::{Error, Result};
use crate::linalg::{q, sparse, Field, RatMatrix, SparseVec, Subspace, Q};

/// Finite-dimensional Lie algebra with a grading `g = g₋ₖ ⊕ … ⊕ gₖ`.
///
/// The bracket table is stored in full: `table[i][j]` is `[e_i, e_j]`.
/// Constructors fill both halves, so antisymmetry only fails for tables
/// read from external input.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    name: String,
    k: i32,
    degrees: Vec<i32>,
    table: Vec<Vec<SparseVec<Q>>>,
    cartan: Vec<SparseVec<Q>>,
    structural: OnceLock<std::result::Result<(), String>>,
}

impl PartialEq for GradedLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.k == other.k
            && self.degrees == other.degrees
            && self.table == other.table
            && self.cartan == other.cartan
    }
}

impl GradedLieAlgebra {
    /// Builds an algebra from brackets `[e_i, e_j]` listed for `i < j`.
    pub fn from_brackets(
        name: impl Into<String>,
        k: i32,
        degrees: Vec<i32>,
        brackets: impl IntoIterator<Item = (usize, usize, SparseVec<Q>)>,
    ) -> Result<Self> {
        let n = degrees.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, j, v) in brackets {
            if i >= n || j >= n || v.iter().any(|(t, _)| *t >= n) {
                return crate::error::input(format!("bracket index out of range in [{i},{j}]"));
            }
            if i == j {
                return crate::error::input(format!("bracket [{i},{i}] listed"));
            }
            let v = sparse::collect(v);
            table[j][i] = sparse::neg(&v);
            table[i][j] = v;
        }
        Self::from_table(name, k, degrees, table)
    }

    /// Uses `table` as given, without enforcing antisymmetry.
    pub fn from_table(
        name: impl Into<String>,
        k: i32,
        degrees: Vec<i32>,
        table: Vec<Vec<SparseVec<Q>>>,
    ) -> Result<Self> {
        let n = degrees.len();
        if k < 1 {
            return crate::error::input("grading depth k must be positive");
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: table.len(),
            });
        }
        Ok(GradedLieAlgebra {
            name: name.into(),
            k,
            degrees,
            table,
            cartan: Vec::new(),
            structural: OnceLock::new(),
        })
    }

    /// Records commuting degree-zero elements that act diagonalizably
    /// (possibly only after complexification).
    pub fn with_cartan(mut self, cartan: Vec<SparseVec<Q>>) -> Self {
        self.cartan = cartan;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn cartan(&self) -> &[SparseVec<Q>] {
        &self.cartan
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec<Q> {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> SparseVec<Q> {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let row = &self.table[*i][*j];
                if row.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (t, c) in row {
                    let e = acc.entry(*t).or_insert_with(|| q(0));
                    *e += &ab * c;
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !Field::is_zero(v)).collect()
    }

    /// `[e_i, y]`.
    pub fn bracket_with_basis(&self, i: usize, y: &[(usize, Q)]) -> SparseVec<Q> {
        self.bracket(&[(i, q(1))], y)
    }

    /// Matrix of `ad x`; column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[(usize, Q)]) -> RatMatrix {
        let n = self.dim();
        let mut entries = Vec::new();
        for j in 0..n {
            for (t, c) in self.bracket(x, &[(j, q(1))]) {
                entries.push((t, j, c));
            }
        }
        RatMatrix::from_triplets(n, n, entries)
    }

    /// Indices of basis elements of degree `d`, in basis order.
    pub fn component(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// `(dim g₋ₖ, …, dim gₖ)`.
    pub fn component_dims(&self) -> Vec<usize> {
        (-self.k..=self.k).map(|d| self.component(d).len()).collect()
    }

    pub fn component_subspace(&self, d: i32) -> Subspace {
        let basis: Vec<SparseVec<Q>> = self
            .component(d)
            .into_iter()
            .map(|i| vec![(i, q(1))])
            .collect();
        Subspace::span(self.dim(), &basis)
    }

    /// Degree of a nonzero homogeneous element, `None` otherwise.
    pub fn homogeneous_degree(&self, x: &[(usize, Q)]) -> Option<i32> {
        let d = self.degrees[x.first()?.0];
        x.iter().all(|(i, _)| self.degrees[*i] == d).then_some(d)
    }

    pub fn negative_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] < 0).collect()
    }

    /// `g₋` as an algebra in its own right, basis order inherited.
    pub fn negative_part(&self) -> GradedLieAlgebra {
        self.restrict(&self.negative_indices(), format!("{}-minus", self.name))
    }

    /// Restriction of the table to a set of basis elements spanning a
    /// subalgebra. Panics if a bracket leaves the span.
    pub(crate) fn restrict(&self, idx: &[usize], name: String) -> GradedLieAlgebra {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let table = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| {
                        self.table[i][j]
                            .iter()
                            .map(|(t, c)| (pos[t], c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let k = idx
            .iter()
            .map(|&i| self.degrees[i].abs())
            .max()
            .unwrap_or(1)
            .max(1);
        GradedLieAlgebra {
            name,
            k,
            degrees: idx.iter().map(|&i| self.degrees[i]).collect(),
            table,
            cartan: Vec::new(),
            structural: OnceLock::new(),
        }
    }

    /// Errors unless the structural checks of [`validate`] pass
    /// (everything except semisimplicity). The result is cached.
    pub fn require_valid(&self) -> Result<()> {
        self.structural
            .get_or_init(|| {
                let report = validate::structural_report(self);
                if report.passed() {
                    Ok(())
                } else {
                    Err(report.failure_summary())
                }
            })
            .clone()
            .map_err(Error::InvalidAlgebra)
    }

    /// Change of basis: new basis vector `a` is `Σ_b p[a][b] e_b`. `p` must
    /// be invertible and map each `g_d` into itself.
    pub fn change_basis(&self, p: &RatMatrix) -> Result<GradedLieAlgebra> {
        let n = self.dim();
        let mut e = crate::linalg::Echelon::with_tracking(n);
        for r in p.sparse_rows() {
            if !e.insert(r) {
                return crate::error::input("change of basis is singular");
            }
        }
        for (a, r) in p.sparse_rows().iter().enumerate() {
            if r.iter().any(|(b, _)| self.degrees[*b] != self.degrees[a]) {
                return crate::error::input("change of basis does not preserve the grading");
            }
        }
        let mut table = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let v = self.bracket(p.row(a), p.row(b));
                table[a][b] = e.express(&v).expect("bracket lies in the span of a basis");
            }
        }
        let cartan = self
            .cartan
            .iter()
            .map(|h| e.express(h).expect("basis"))
            .collect();
        let mut g = GradedLieAlgebra::from_table(self.name.clone(), self.k, self.degrees.clone(), table)?;
        g.cartan = cartan;
        Ok(g)
    }
}
