//! Chevalley–Eilenberg cohomology `H^q(g₋, g)` split by homogeneity.
//!
//! A basis `q`-cochain sends `e_{i₁}∧…∧e_{i_q}` (`i₁ < … < i_q` in `g₋`) to
//! a basis vector `e_t` of `g`; its homogeneity is `deg t − Σ deg i_s`. The
//! differential preserves homogeneity.

mod h2;
mod probe;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

pub use h2::{class_stabilizer_dim, g0_action_on_h2, CohomologyClass, H2Slice, H2};
pub use probe::{max_stabilizer_probe, ProbeResult, ProbeWitness, WitnessSource};

use crate::algebra::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::linalg::fraction_free::fraction_free_rank;
use crate::linalg::RatMatrix;

/// Basis of the cochains of one degree and homogeneity.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub q: usize,
    pub homogeneity: i32,
    /// `(inputs, output)`; inputs are positions in [`CochainComplex::negative`].
    pub basis: Vec<(Vec<usize>, usize)>,
    index: HashMap<(u64, usize), usize>,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, inputs: &[usize], output: usize) -> Option<usize> {
        self.index.get(&(mask(inputs), output)).copied()
    }
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

fn subsets(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, q, &mut Vec::new(), &mut out);
    out
}

/// Matrices of the differential on one `(q, h)` slice.
#[derive(Clone, Debug)]
pub struct CochainComplexSlice {
    pub q: usize,
    pub homogeneity: i32,
    /// `C^{q−1}(h) → C^q(h)`; rows index the target.
    pub d_in: RatMatrix,
    /// `C^q(h) → C^{q+1}(h)`; rows index the target.
    pub d_out: RatMatrix,
    pub space_dim: usize,
}

/// The complex `Λ^• g₋* ⊗ g` of an algebra.
pub struct CochainComplex<'a> {
    g: &'a GradedLieAlgebra,
    /// Basis indices of `g₋`, in basis order.
    negative: Vec<usize>,
    /// For each position `m` in `g₋`: `(a, b, c)` with `a < b` positions and
    /// `c` the coefficient of `e_m` in `[e_a, e_b]`.
    pairs_into: Vec<Vec<(usize, usize, crate::linalg::Q)>>,
}

impl<'a> CochainComplex<'a> {
    pub fn new(g: &'a GradedLieAlgebra) -> Result<Self> {
        g.require_valid()?;
        let negative = g.negative_indices();
        if negative.len() > 64 {
            return input("g_- of dimension above 64 is not supported");
        }
        let pos: HashMap<usize, usize> = negative.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut pairs_into = vec![Vec::new(); negative.len()];
        for a in 0..negative.len() {
            for b in a + 1..negative.len() {
                for (t, c) in g.bracket_basis(negative[a], negative[b]) {
                    pairs_into[pos[t]].push((a, b, c.clone()));
                }
            }
        }
        Ok(CochainComplex {
            g,
            negative,
            pairs_into,
        })
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        self.g
    }

    pub fn negative(&self) -> &[usize] {
        &self.negative
    }

    fn weight(&self, s: &[usize]) -> i32 {
        s.iter().map(|&p| self.g.degree(self.negative[p])).sum()
    }

    pub fn space(&self, q: usize, h: i32) -> CochainSpace {
        let mut basis = Vec::new();
        let mut index = HashMap::new();
        if q <= self.negative.len() {
            for s in subsets(self.negative.len(), q) {
                let want = h + self.weight(&s);
                for t in 0..self.g.dim() {
                    if self.g.degree(t) == want {
                        index.insert((mask(&s), t), basis.len());
                        basis.push((s.clone(), t));
                    }
                }
            }
        }
        CochainSpace {
            q,
            homogeneity: h,
            basis,
            index,
        }
    }

    /// Homogeneities with a nonzero space of `q`-cochains.
    pub fn homogeneities(&self, q: usize) -> Vec<i32> {
        if q > self.negative.len() {
            return Vec::new();
        }
        let mut weights: Vec<i32> = subsets(self.negative.len(), q)
            .iter()
            .map(|s| self.weight(s))
            .collect();
        weights.sort_unstable();
        weights.dedup();
        let mut degrees = self.g.degrees().to_vec();
        degrees.sort_unstable();
        degrees.dedup();
        let mut hs: Vec<i32> = weights
            .iter()
            .flat_map(|w| degrees.iter().map(move |d| d - w))
            .collect();
        hs.sort_unstable();
        hs.dedup();
        hs
    }

    /// Matrix of `∂: C^q(h) → C^{q+1}(h)`; rows index the target.
    pub fn differential(&self, src: &CochainSpace, dst: &CochainSpace) -> RatMatrix {
        assert_eq!(src.q + 1, dst.q);
        assert_eq!(src.homogeneity, dst.homogeneity);
        let n = self.negative.len();
        let mut entries = Vec::new();
        for (col, (inputs, t)) in src.basis.iter().enumerate() {
            // Σ (−1)^i [X_i, φ(…X̂_i…)]
            for x in 0..n {
                if inputs.contains(&x) {
                    continue;
                }
                let pos = inputs.iter().filter(|&&i| i < x).count();
                let mut j = inputs.clone();
                j.insert(pos, x);
                for (s, c) in self.g.bracket_basis(self.negative[x], *t) {
                    if let Some(row) = dst.index_of(&j, *s) {
                        let v = if pos % 2 == 0 { c.clone() } else { -c.clone() };
                        entries.push((row, col, v));
                    }
                }
            }
            // Σ (−1)^{i+j} φ([X_i, X_j], …): the bracket must land on an input
            for (mpos, &m) in inputs.iter().enumerate() {
                let rest: Vec<usize> = inputs.iter().copied().filter(|&i| i != m).collect();
                for (a, b, c) in &self.pairs_into[m] {
                    if rest.contains(a) || rest.contains(b) {
                        continue;
                    }
                    let mut j = rest.clone();
                    j.push(*a);
                    j.push(*b);
                    j.sort_unstable();
                    let i = j.iter().position(|v| v == a).unwrap();
                    let k = j.iter().position(|v| v == b).unwrap();
                    if let Some(row) = dst.index_of(&j, *t) {
                        let v = if (i + k + mpos) % 2 == 0 { c.clone() } else { -c.clone() };
                        entries.push((row, col, v));
                    }
                }
            }
        }
        RatMatrix::from_triplets(dst.dim(), src.dim(), entries)
    }

    pub fn slice(&self, q: usize, h: i32) -> CochainComplexSlice {
        let here = self.space(q, h);
        let next = self.space(q + 1, h);
        let d_out = self.differential(&here, &next);
        let d_in = if q == 0 {
            RatMatrix::zeros(here.dim(), 0)
        } else {
            self.differential(&self.space(q - 1, h), &here)
        };
        CochainComplexSlice {
            q,
            homogeneity: h,
            d_in,
            d_out,
            space_dim: here.dim(),
        }
    }

    /// `dim H^q(h) = dim C^q(h) − rank ∂^q(h) − rank ∂^{q−1}(h)`.
    pub fn cohomology_dim(&self, q: usize, h: i32) -> usize {
        let s = self.slice(q, h);
        s.space_dim - fraction_free_rank(&s.d_out) - fraction_free_rank(&s.d_in)
    }
}

pub fn cochain_differential(g: &GradedLieAlgebra, q: usize, h: i32) -> Result<CochainComplexSlice> {
    Ok(CochainComplex::new(g)?.slice(q, h))
}

/// Table of `dim H^q` by homogeneity; only nonzero entries are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub q: usize,
    pub by_homogeneity: BTreeMap<i32, usize>,
    pub total: usize,
}

pub fn cohomology_dims(g: &GradedLieAlgebra, q: usize) -> Result<CohomologyTable> {
    let c = CochainComplex::new(g)?;
    let dims: Vec<(i32, usize)> = c
        .homogeneities(q)
        .into_par_iter()
        .map(|h| (h, c.cohomology_dim(q, h)))
        .collect();
    let by_homogeneity: BTreeMap<i32, usize> = dims.into_iter().filter(|(_, d)| *d > 0).collect();
    let total = by_homogeneity.values().sum();
    Ok(CohomologyTable {
        q,
        by_homogeneity,
        total,
    })
}

/// Whether `H¹(g₋, g)` vanishes in every homogeneity `≥ 0`.
pub fn h1_negative_test(g: &GradedLieAlgebra) -> Result<bool> {
    let c = CochainComplex::new(g)?;
    let hs: Vec<i32> = c.homogeneities(1).into_iter().filter(|&h| h >= 0).collect();
    Ok(hs.into_par_iter().all(|h| c.cohomology_dim(1, h) == 0))
}
