//! Homogeneous derivations of a graded Lie algebra.

use std::collections::BTreeMap;

use super::GradedLieAlgebra;
use crate::linalg::{q, sparse, Field, RatMatrix, SparseVec, Subspace, Q};

/// Space of derivations `D` with `D(g_i) ⊆ g_{i+degree}`.
///
/// A derivation is stored as a vector of length `dim²`; entry `t·dim + j`
/// is the coefficient of `e_t` in `D e_j`.
#[derive(Clone, Debug)]
pub struct Derivations {
    pub dim: usize,
    pub degree: i32,
    pub space: Subspace,
}

impl Derivations {
    pub fn len(&self) -> usize {
        self.space.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_zero()
    }

    pub fn matrices(&self) -> Vec<RatMatrix> {
        self.space
            .basis()
            .iter()
            .map(|v| to_matrix(self.dim, v))
            .collect()
    }
}

/// Matrix (columns are images of basis vectors) of a flattened map.
pub fn to_matrix(dim: usize, v: &[(usize, Q)]) -> RatMatrix {
    RatMatrix::from_triplets(dim, dim, v.iter().map(|(i, x)| (i / dim, i % dim, x.clone())).collect())
}

/// Flattening inverse to [`to_matrix`].
pub fn flatten_map(m: &RatMatrix) -> SparseVec<Q> {
    let dim = m.ncols();
    let mut out = Vec::new();
    for (r, row) in m.sparse_rows().iter().enumerate() {
        out.extend(row.iter().map(|(c, x)| (r * dim + c, x.clone())));
    }
    out
}

pub fn graded_derivations(g: &GradedLieAlgebra, degree: i32) -> Derivations {
    let n = g.dim();
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..n).map(move |t| (t, j)))
        .filter(|&(t, j)| g.degree(t) == g.degree(j) + degree)
        .collect();
    let index: BTreeMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(u, &p)| (p, u)).collect();
    let mut rows: Vec<SparseVec<Q>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut eq: BTreeMap<(usize, usize), Q> = BTreeMap::new();
            let mut add = |s: usize, u: Option<&usize>, c: Q| {
                if let Some(&u) = u {
                    *eq.entry((s, u)).or_insert_with(|| q(0)) += c;
                }
            };
            // D[e_i, e_j]
            for (r, c) in g.bracket_basis(i, j) {
                for s in 0..n {
                    add(s, index.get(&(s, *r)), c.clone());
                }
            }
            // −[D e_i, e_j] − [e_i, D e_j]
            for t in 0..n {
                for (s, c) in g.bracket_basis(t, j) {
                    add(*s, index.get(&(t, i)), -c.clone());
                }
                for (s, c) in g.bracket_basis(i, t) {
                    add(*s, index.get(&(t, j)), -c.clone());
                }
            }
            let mut by_s: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
            for ((s, u), c) in eq {
                if !Field::is_zero(&c) {
                    by_s.entry(s).or_default().push((u, c));
                }
            }
            rows.extend(by_s.into_values().map(sparse::collect));
        }
    }
    let kernel = RatMatrix::from_sparse_rows(unknowns.len(), rows).kernel();
    let lifted: Vec<SparseVec<Q>> = kernel
        .basis()
        .iter()
        .map(|v| {
            sparse::collect(v.iter().map(|(u, x)| {
                let (t, j) = unknowns[*u];
                (t * n + j, x.clone())
            }))
        })
        .collect();
    Derivations {
        dim: n,
        degree,
        space: Subspace::span(n * n, &lifted),
    }
}
