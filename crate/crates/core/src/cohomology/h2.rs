//! `H²(g₋, g)` with quotient coordinates and the action of `g₀`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CochainComplex, CochainSpace};
use crate::algebra::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::linalg::{q, sparse, Echelon, Field, RatMatrix, SparseVec, Subspace, Q};

/// A cohomology class, given by a cocycle in the basis of the cochain space
/// of its degree and homogeneity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub q: usize,
    pub homogeneity: i32,
    #[serde(with = "sparse_serde")]
    pub cocycle: SparseVec<Q>,
}

pub(crate) mod sparse_serde {
    use super::*;
    use crate::algebra::json::{sparse_from_json, sparse_to_json, SparseJson};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &SparseVec<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        sparse_to_json(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<SparseVec<Q>, D::Error> {
        let j = SparseJson::deserialize(d)?;
        sparse_from_json(&j, usize::MAX).map_err(serde::de::Error::custom)
    }
}

/// One homogeneity component of `H²`.
#[derive(Clone, Debug)]
pub struct H2Slice {
    pub homogeneity: i32,
    pub space: CochainSpace,
    /// `∂: C²(h) → C³(h)`.
    pub d_out: RatMatrix,
    coboundaries: Echelon<Q>,
    /// Cocycles reduced modulo coboundaries, in reduced echelon form; they
    /// represent a basis of the slice.
    reps: Vec<SparseVec<Q>>,
    /// `ρ(e_k)` for the degree-zero basis elements, in the basis `reps`.
    action: Vec<RatMatrix>,
}

impl H2Slice {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[SparseVec<Q>] {
        &self.reps
    }

    /// Matrices of the degree-zero basis elements acting on this slice;
    /// column `i` is the image of representative `i`.
    pub fn action_matrices(&self) -> &[RatMatrix] {
        &self.action
    }

    /// Canonical representative of the class of a cocycle.
    pub fn normal_form(&self, cocycle: &[(usize, Q)]) -> SparseVec<Q> {
        self.coboundaries.reduce(cocycle)
    }

    /// Coordinates of the class of a cocycle in the basis of
    /// representatives.
    pub fn coordinates(&self, cocycle: &[(usize, Q)]) -> Vec<Q> {
        let nf = self.normal_form(cocycle);
        self.reps
            .iter()
            .map(|r| sparse::get(&nf, r[0].0))
            .collect()
    }

    pub fn is_cocycle(&self, v: &[(usize, Q)]) -> bool {
        self.d_out.mul_vec(v).is_empty()
    }

    pub fn class_from_coordinates(&self, coords: &[Q]) -> CohomologyClass {
        let mut v = Vec::new();
        for (r, c) in self.reps.iter().zip(coords) {
            if !Field::is_zero(c) {
                v = sparse::axpy(&v, c, r);
            }
        }
        CohomologyClass {
            q: 2,
            homogeneity: self.homogeneity,
            cocycle: v,
        }
    }
}

/// All nonzero homogeneity components of `H²(g₋, g)`.
#[derive(Clone, Debug)]
pub struct H2 {
    g: GradedLieAlgebra,
    negative: Vec<usize>,
    g0: Vec<usize>,
    pub slices: Vec<H2Slice>,
}

impl H2 {
    pub fn compute(g: &GradedLieAlgebra) -> Result<H2> {
        let c = CochainComplex::new(g)?;
        let negative = c.negative().to_vec();
        let g0 = g.component(0);
        let mut slices: Vec<H2Slice> = c
            .homogeneities(2)
            .into_par_iter()
            .filter_map(|h| {
                let s1 = c.space(1, h);
                let s2 = c.space(2, h);
                let s3 = c.space(3, h);
                let d1 = c.differential(&s1, &s2);
                let d2 = c.differential(&s2, &s3);
                let coboundaries = d1.transpose().echelon();
                let cocycles = d2.kernel();
                if cocycles.dim() == coboundaries.rank() {
                    return None;
                }
                let reduced: Vec<SparseVec<Q>> = cocycles
                    .basis()
                    .iter()
                    .map(|z| coboundaries.reduce(z))
                    .collect();
                let reps = Subspace::span(s2.dim(), &reduced).basis().to_vec();
                debug_assert_eq!(reps.len(), cocycles.dim() - coboundaries.rank());
                Some(H2Slice {
                    homogeneity: h,
                    space: s2,
                    d_out: d2,
                    coboundaries,
                    reps,
                    action: Vec::new(),
                })
            })
            .collect();
        slices.sort_by_key(|s| s.homogeneity);
        let mut h2 = H2 {
            g: g.clone(),
            negative,
            g0,
            slices,
        };
        for i in 0..h2.slices.len() {
            let action = h2
                .g0
                .par_iter()
                .map(|&k| h2.action_matrix(&h2.slices[i], &[(k, q(1))]))
                .collect();
            h2.slices[i].action = action;
        }
        Ok(h2)
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.slices.iter().map(H2Slice::dim).sum()
    }

    /// Basis indices of `g₀`.
    pub fn g0(&self) -> &[usize] {
        &self.g0
    }

    pub fn slice(&self, h: i32) -> Option<&H2Slice> {
        self.slices.iter().find(|s| s.homogeneity == h)
    }

    /// `(a·φ)(X,Y) = [a,φ(X,Y)] − φ([a,X],Y) − φ(X,[a,Y])` for `a ∈ g₀`.
    pub fn act_on_cochain(&self, slice: &H2Slice, a: &[(usize, Q)], phi: &[(usize, Q)]) -> SparseVec<Q> {
        let pos: HashMap<usize, usize> = self
            .negative
            .iter()
            .enumerate()
            .map(|(p, &i)| (i, p))
            .collect();
        let mut values: HashMap<(usize, usize), SparseVec<Q>> = HashMap::new();
        for (idx, c) in phi {
            let (inputs, t) = &slice.space.basis[*idx];
            let e = values.entry((inputs[0], inputs[1])).or_default();
            *e = sparse::axpy(e, c, &[(*t, q(1))]);
        }
        let eval = |x: usize, y: usize| -> SparseVec<Q> {
            if x == y {
                return Vec::new();
            }
            let (lo, hi, s) = if x < y { (x, y, 1) } else { (y, x, -1) };
            match values.get(&(lo, hi)) {
                Some(v) if s == 1 => v.clone(),
                Some(v) => sparse::neg(v),
                None => Vec::new(),
            }
        };
        let ad_a: Vec<SparseVec<Q>> = self
            .negative
            .iter()
            .map(|&i| {
                self.g
                    .bracket(a, &[(i, q(1))])
                    .into_iter()
                    .map(|(t, c)| (pos[&t], c))
                    .collect()
            })
            .collect();
        let n = self.negative.len();
        let mut out: Vec<(usize, Q)> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let mut val = self.g.bracket(a, &eval(u, v));
                for (m, c) in &ad_a[u] {
                    val = sparse::axpy(&val, &-c.clone(), &eval(*m, v));
                }
                for (m, c) in &ad_a[v] {
                    val = sparse::axpy(&val, &-c.clone(), &eval(u, *m));
                }
                for (t, c) in val {
                    let row = slice
                        .space
                        .index_of(&[u, v], t)
                        .expect("degree-zero action preserves homogeneity");
                    out.push((row, c));
                }
            }
        }
        sparse::collect(out)
    }

    fn action_matrix(&self, slice: &H2Slice, a: &[(usize, Q)]) -> RatMatrix {
        let cols: Vec<Vec<Q>> = slice
            .reps
            .iter()
            .map(|r| slice.coordinates(&self.act_on_cochain(slice, a, r)))
            .collect();
        let n = slice.dim();
        let dense = (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect();
        RatMatrix::from_dense(dense).expect("square")
    }

    /// `ρ(a)` on a slice for an arbitrary `a ∈ g₀`.
    pub fn action_of(&self, slice: &H2Slice, a: &[(usize, Q)]) -> Result<RatMatrix> {
        self.require_degree_zero(a)?;
        Ok(self.action_matrix(slice, a))
    }

    fn require_degree_zero(&self, a: &[(usize, Q)]) -> Result<()> {
        match self.g.homogeneous_degree(a) {
            None if !a.is_empty() => input("element of g is not homogeneous"),
            Some(d) if d != 0 => input(format!("element has degree {d}, expected 0")),
            _ => Ok(()),
        }
    }

    pub fn slice_of(&self, c: &CohomologyClass) -> Result<&H2Slice> {
        if c.q != 2 {
            return input(format!("class of degree {} is not in H^2", c.q));
        }
        let Some(s) = self.slice(c.homogeneity) else {
            return input(format!("H^2 vanishes in homogeneity {}", c.homogeneity));
        };
        if c.cocycle.iter().any(|(i, _)| *i >= s.space.dim()) || !s.is_cocycle(&c.cocycle) {
            return input("vector is not a cocycle of its slice");
        }
        Ok(s)
    }

    /// The stabilizer `{a ∈ g₀ : a·c = 0 in H²}`, as a subspace of `g`.
    pub fn class_stabilizer(&self, c: &CohomologyClass) -> Result<Subspace> {
        let s = self.slice_of(c)?;
        let coords = s.coordinates(&c.cocycle);
        if coords.iter().all(Field::is_zero) {
            return input("stabilizer of the zero class is requested");
        }
        let v = sparse::from_dense(&coords);
        let columns: Vec<SparseVec<Q>> = s.action.iter().map(|m| m.mul_vec(&v)).collect();
        // kernel of the map g₀ → H², written with columns indexed by g₀
        let m = RatMatrix::from_sparse_rows(s.dim(), columns).transpose();
        let ker = m.kernel();
        let lifted: Vec<SparseVec<Q>> = ker
            .basis()
            .iter()
            .map(|w| w.iter().map(|(k, x)| (self.g0[*k], x.clone())).collect())
            .collect();
        Ok(Subspace::span(self.g.dim(), &lifted))
    }
}

/// Class of `a·φ`, in normal form modulo coboundaries.
pub fn g0_action_on_h2(h2: &H2, a: &[(usize, Q)], c: &CohomologyClass) -> Result<CohomologyClass> {
    h2.require_degree_zero(a)?;
    let s = h2.slice_of(c)?;
    let image = h2.act_on_cochain(s, a, &c.cocycle);
    Ok(CohomologyClass {
        q: 2,
        homogeneity: c.homogeneity,
        cocycle: s.normal_form(&image),
    })
}

pub fn class_stabilizer_dim(h2: &H2, c: &CohomologyClass) -> Result<usize> {
    Ok(h2.class_stabilizer(c)?.dim())
}
