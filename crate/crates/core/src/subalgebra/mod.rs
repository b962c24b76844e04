//! Graded subalgebras: verification, bracket closure, stabilizers of
//! subspaces, witness constructions and randomized dimension-gap scans.

mod scan;
mod witnesses;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use scan::{gap_scan, GapScan, Violation};
pub use witnesses::{witness_bk, witness_catalog, Witness};

use crate::algebra::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::linalg::{q, sparse, Echelon, RatMatrix, SparseVec, Subspace, Q};
use crate::rational::{format_sparse, parse_dense};

/// A graded subspace `b = ⊕ b_i` with each `b_i ⊆ g_i`, stored in the
/// coordinates of `g`.
#[derive(Clone, Debug)]
pub struct GradedSubalgebra<'a> {
    algebra: &'a GradedLieAlgebra,
    components: BTreeMap<i32, Subspace>,
}

impl<'a> GradedSubalgebra<'a> {
    pub fn new(g: &'a GradedLieAlgebra, components: BTreeMap<i32, Subspace>) -> Result<Self> {
        let mut kept = BTreeMap::new();
        for (d, s) in components {
            if s.ambient_dim() != g.dim() {
                return input(format!("component {d} has ambient dimension {}, expected {}", s.ambient_dim(), g.dim()));
            }
            if s.basis().iter().any(|v| v.iter().any(|(i, _)| g.degree(*i) != d)) {
                return input(format!("component {d} leaves g_{d}"));
            }
            if !s.is_zero() {
                kept.insert(d, s);
            }
        }
        Ok(GradedSubalgebra { algebra: g, components: kept })
    }

    /// Groups homogeneous vectors by degree and spans each group.
    pub fn from_vectors(g: &'a GradedLieAlgebra, vectors: &[SparseVec<Q>]) -> Result<Self> {
        let mut groups: BTreeMap<i32, Vec<SparseVec<Q>>> = BTreeMap::new();
        for v in vectors {
            if v.is_empty() {
                continue;
            }
            let Some(d) = g.homogeneous_degree(v) else {
                return input("vector is not homogeneous");
            };
            groups.entry(d).or_default().push(v.clone());
        }
        let comps = groups.into_iter().map(|(d, vs)| (d, Subspace::span(g.dim(), &vs))).collect();
        Self::new(g, comps)
    }

    /// Span of the given basis elements of `g`.
    pub fn from_basis_indices(g: &'a GradedLieAlgebra, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vs: Vec<SparseVec<Q>> = indices.into_iter().map(|i| vec![(i, q(1))]).collect();
        if vs.iter().any(|v| v[0].0 >= g.dim()) {
            return input("basis index out of range");
        }
        Self::from_vectors(g, &vs)
    }

    pub fn whole(g: &'a GradedLieAlgebra) -> Self {
        Self::from_basis_indices(g, 0..g.dim()).expect("basis of g")
    }

    pub fn algebra(&self) -> &'a GradedLieAlgebra {
        self.algebra
    }

    pub fn component(&self, d: i32) -> Subspace {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.algebra.dim()))
    }

    pub fn components(&self) -> &BTreeMap<i32, Subspace> {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.values().map(Subspace::dim).sum()
    }

    /// `(d₋ₖ, …, d_k)`.
    pub fn profile(&self) -> Vec<usize> {
        let k = self.algebra.k();
        (-k..=k).map(|d| self.components.get(&d).map_or(0, Subspace::dim)).collect()
    }

    pub fn is_proper(&self) -> bool {
        self.dim() < self.algebra.dim()
    }

    pub fn to_json(&self) -> SubalgebraJson {
        let g = self.algebra;
        let components = self
            .components
            .iter()
            .map(|(d, s)| {
                let idx = g.component(*d);
                let rows = s
                    .basis()
                    .iter()
                    .map(|v| {
                        let local: SparseVec<Q> = v
                            .iter()
                            .map(|(i, c)| (idx.binary_search(i).expect("in component"), c.clone()))
                            .collect();
                        format_sparse(&local, idx.len())
                    })
                    .collect();
                (d.to_string(), rows)
            })
            .collect();
        SubalgebraJson {
            algebra: g.name().to_string(),
            components,
        }
    }

    pub fn from_json(g: &'a GradedLieAlgebra, j: &SubalgebraJson) -> Result<Self> {
        if j.algebra != g.name() {
            return input(format!("subalgebra of {} given for algebra {}", j.algebra, g.name()));
        }
        let mut comps = BTreeMap::new();
        for (key, rows) in &j.components {
            let d: i32 = key
                .parse()
                .map_err(|_| crate::Error::Input(format!("bad degree key {key:?}")))?;
            let idx = g.component(d);
            if idx.is_empty() {
                return input(format!("algebra has no component of degree {d}"));
            }
            let mut vs = Vec::new();
            for r in rows {
                if r.len() != idx.len() {
                    return input(format!("row of length {} in component {d} of dimension {}", r.len(), idx.len()));
                }
                let dense = parse_dense(r)?;
                vs.push(sparse::collect(dense.into_iter().enumerate().map(|(p, c)| (idx[p], c))));
            }
            comps.insert(d, Subspace::span(g.dim(), &vs));
        }
        Self::new(g, comps)
    }
}

/// Subalgebra JSON: `{"algebra", "components": {"i": [[coord × dim g_i], …]}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubalgebraJson {
    pub algebra: String,
    pub components: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraReport {
    pub closed: bool,
    pub dim: usize,
    pub profile: Vec<usize>,
    pub proper: bool,
    /// Degrees `(i, j)` of a basis pair whose bracket leaves `b_{i+j}`.
    pub failure: Option<(i32, i32)>,
}

pub fn verify_subalgebra(b: &GradedSubalgebra) -> SubalgebraReport {
    let g = b.algebra;
    let mut failure = None;
    'outer: for (&i, si) in &b.components {
        for (&j, sj) in b.components.range(i..) {
            let target = b.component(i + j);
            for (s, u) in si.basis().iter().enumerate() {
                let start = if i == j { s + 1 } else { 0 };
                for v in &sj.basis()[start..] {
                    let w = g.bracket(u, v);
                    if !w.is_empty() && !target.contains_vec(&w) {
                        failure = Some((i, j));
                        break 'outer;
                    }
                }
            }
        }
    }
    SubalgebraReport {
        closed: failure.is_none(),
        dim: b.dim(),
        profile: b.profile(),
        proper: b.is_proper(),
        failure,
    }
}

/// Smallest graded subalgebra containing homogeneous generators.
pub fn bracket_closure<'a>(g: &'a GradedLieAlgebra, generators: &[SparseVec<Q>]) -> Result<GradedSubalgebra<'a>> {
    let k = g.k();
    let mut ech: BTreeMap<i32, Echelon<Q>> = (-k..=k).map(|d| (d, Echelon::new(g.dim()))).collect();
    let mut basis: Vec<(i32, SparseVec<Q>)> = Vec::new();
    let mut queue: Vec<(i32, SparseVec<Q>)> = Vec::new();
    for x in generators {
        if x.is_empty() {
            continue;
        }
        let Some(d) = g.homogeneous_degree(x) else {
            return input("generator is not homogeneous");
        };
        if ech.get_mut(&d).expect("degree in range").insert(x) {
            queue.push((d, x.clone()));
        }
    }
    let sizes: BTreeMap<i32, usize> = (-k..=k).map(|d| (d, g.component(d).len())).collect();
    let mut total: usize = ech.values().map(Echelon::rank).sum();
    while let Some((d, x)) = queue.pop() {
        if total == g.dim() {
            break;
        }
        for (e, y) in &basis {
            let t = d + e;
            if t.abs() > k || ech[&t].rank() == sizes[&t] {
                continue;
            }
            let z = g.bracket(&x, y);
            if !z.is_empty() && ech.get_mut(&t).expect("degree in range").insert(&z) {
                total += 1;
                queue.push((t, z));
            }
        }
        basis.push((d, x));
    }
    let comps = ech
        .into_iter()
        .map(|(d, e)| (d, Subspace::from_echelon(&e)))
        .collect();
    GradedSubalgebra::new(g, comps)
}

/// `dim {a ∈ g₀ : [a, w] ⊆ w}` for `w ⊆ g_d`.
pub fn subspace_stabilizer_dim(g: &GradedLieAlgebra, degree: i32, w: &Subspace) -> Result<usize> {
    Ok(subspace_stabilizer(g, degree, w)?.dim())
}

/// `{a ∈ g₀ : [a, w] ⊆ w}` for `w ⊆ g_d`, in the coordinates of `g`.
pub fn subspace_stabilizer(g: &GradedLieAlgebra, degree: i32, w: &Subspace) -> Result<Subspace> {
    if w.ambient_dim() != g.dim() {
        return input("subspace lives in the wrong ambient dimension");
    }
    if degree == 0 || degree.abs() > g.k() {
        return input(format!("module degree {degree} is not a nonzero degree of the grading"));
    }
    if w.basis().iter().any(|v| v.iter().any(|(i, _)| g.degree(*i) != degree)) {
        return input(format!("subspace is not contained in g_{degree}"));
    }
    let g0 = g.component(0);
    let ann = w.annihilator();
    let mut rows: Vec<SparseVec<Q>> = Vec::new();
    for v in w.basis() {
        let images: Vec<SparseVec<Q>> = g0.iter().map(|&t| g.bracket(&[(t, q(1))], v)).collect();
        for f in ann.basis() {
            rows.push(sparse::collect(
                images.iter().enumerate().map(|(t, im)| (t, sparse::dot(f, im))),
            ));
        }
    }
    let ker = RatMatrix::from_sparse_rows(g0.len(), rows).kernel();
    let lifted: Vec<SparseVec<Q>> = ker
        .basis()
        .iter()
        .map(|v| v.iter().map(|(t, c)| (g0[*t], c.clone())).collect())
        .collect();
    Ok(Subspace::span(g.dim(), &lifted))
}
