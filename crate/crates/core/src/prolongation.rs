//! Tanaka prolongation of a negatively graded algebra `n` with a degree-zero
//! part `a₀ ⊆ der₀(n)`.
//!
//! The degree `ℓ ≥ 1` component consists of maps `φ` with
//! `φ(n_j) ⊆ g_{j+ℓ}` and `φ[X,Y] = [φX,Y] + [X,φY]`, where an element `u`
//! of nonnegative degree brackets with `Y ∈ n` as `[u,Y] = u(Y)`. Since `n`
//! is generated by `n₋₁`, unknowns are the values on `n₋₁`; values on the
//! rest of `n` follow from fixed bracket expressions, and the derivation
//! identity on all pairs becomes a linear system.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::derivations::{graded_derivations, to_matrix};
use crate::algebra::{GradedLieAlgebra, NilpotentGradedAlgebra};
use crate::error::{input, Result};
use crate::linalg::{q, sparse, Echelon, Field, RatMatrix, SparseVec, Subspace, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProlongationResult {
    /// Dimensions by degree, from `−k` to the last nonzero component.
    pub component_dims: BTreeMap<i32, usize>,
    /// A zero component was reached.
    pub terminated: bool,
    /// Degree cap reached before a zero component.
    pub truncated_at: Option<i32>,
}

impl ProlongationResult {
    pub fn total(&self) -> usize {
        self.component_dims.values().sum()
    }
}

/// Values of the basis maps of one nonnegative component:
/// `maps[b][j]` is the image of `e_j` in local coordinates of the component
/// of degree `ℓ + deg e_j`.
type Maps = Vec<Vec<SparseVec<Q>>>;

struct Tower<'a> {
    n: &'a GradedLieAlgebra,
    k: i32,
    /// Local position of each basis element of `n` within its component.
    local: Vec<usize>,
    /// Basis indices of `n_d` for `d = −1, −2, …` (entry `d` at `−d − 1`).
    negative: Vec<Vec<usize>>,
    /// `maps[ℓ]` for `ℓ = 0, 1, …`.
    maps: Vec<Maps>,
}

impl<'a> Tower<'a> {
    fn dim(&self, m: i32) -> usize {
        if m < -self.k {
            0
        } else if m < 0 {
            self.negative[(-m - 1) as usize].len()
        } else {
            self.maps.get(m as usize).map_or(0, Vec::len)
        }
    }

    /// `[u, e_j]` for `u` in local coordinates of degree `m`.
    fn bracket_with(&self, m: i32, u: &[(usize, Q)], j: usize) -> SparseVec<Q> {
        let target = m + self.n.degree(j);
        if target < -self.k || u.is_empty() {
            return Vec::new();
        }
        if m < 0 {
            let basis = &self.negative[(-m - 1) as usize];
            let lifted: SparseVec<Q> = u.iter().map(|(p, c)| (basis[*p], c.clone())).collect();
            let v = self.n.bracket(&lifted, &[(j, q(1))]);
            sparse::collect(v.into_iter().map(|(t, c)| (self.local[t], c)))
        } else {
            let maps = &self.maps[m as usize];
            let mut acc = Vec::new();
            for (b, c) in u {
                acc = sparse::axpy(&acc, c, &maps[*b][j]);
            }
            acc
        }
    }
}

/// Linear expression valued in one component: column `u` is the value for
/// unknown `u`.
type Expr = Vec<SparseVec<Q>>;

fn expr_bracket(t: &Tower, m: i32, e: &Expr, j: usize) -> Expr {
    e.iter().map(|col| t.bracket_with(m, col, j)).collect()
}

fn expr_add(a: &Expr, c: &Q, b: &Expr) -> Expr {
    a.iter()
        .zip(b)
        .map(|(x, y)| sparse::axpy(x, c, y))
        .collect()
}

/// `[e_a, e_w]` terms expressing one basis element.
type BracketExpression = Vec<(usize, usize, Q)>;

/// Writes each basis element of `n_d`, `d ≤ −2`, as a combination of
/// brackets `[e_a, e_w]` with `a ∈ n₋₁`, `w ∈ n_{d+1}`.
fn bracket_expressions(n: &GradedLieAlgebra, negative: &[Vec<usize>]) -> Result<BTreeMap<usize, BracketExpression>> {
    let mut out = BTreeMap::new();
    for d in 2..=negative.len() {
        let target = &negative[d - 1];
        let mut e = Echelon::with_tracking(n.dim());
        let mut pairs = Vec::new();
        for &a in &negative[0] {
            for &w in &negative[d - 2] {
                e.insert(n.bracket_basis(a, w));
                pairs.push((a, w));
            }
        }
        for &j in target {
            let Some(coeffs) = e.express(&[(j, q(1))]) else {
                return input(format!("basis element {j} is not generated by degree -1"));
            };
            out.insert(j, coeffs.into_iter().map(|(p, c)| (pairs[p].0, pairs[p].1, c)).collect());
        }
    }
    Ok(out)
}

/// Checks that `a0` (flattened maps, see [`crate::algebra::Derivations`])
/// is a subalgebra of `der₀(n)`.
fn check_a0(n: &GradedLieAlgebra, a0: &Subspace) -> Result<Vec<RatMatrix>> {
    let der = graded_derivations(n, 0);
    if a0.ambient_dim() != n.dim() * n.dim() {
        return input(format!(
            "a0 lives in dimension {}, expected {}",
            a0.ambient_dim(),
            n.dim() * n.dim()
        ));
    }
    if !der.space.contains(a0)? {
        return input("a0 is not contained in the degree-zero derivations");
    }
    let mats: Vec<RatMatrix> = a0.basis().iter().map(|v| to_matrix(n.dim(), v)).collect();
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            let c = a.mul(b)?.sub(&b.mul(a)?)?;
            if !a0.contains_vec(&crate::algebra::derivations::flatten_map(&c)) {
                return input("a0 is not closed under the commutator");
            }
        }
    }
    Ok(mats)
}

pub fn tanaka_prolong(n: &NilpotentGradedAlgebra, a0: &Subspace, max_degree: usize) -> Result<ProlongationResult> {
    if max_degree < 1 {
        return input("max_degree must be at least 1");
    }
    let a0_mats = check_a0(n, a0)?;
    let k = n.k();
    let negative: Vec<Vec<usize>> = (1..=k).map(|d| n.component(-d)).collect();
    let mut local = vec![0; n.dim()];
    for comp in &negative {
        for (p, &i) in comp.iter().enumerate() {
            local[i] = p;
        }
    }
    let expressions = bracket_expressions(n, &negative)?;
    let degree0: Maps = a0_mats
        .iter()
        .map(|m| {
            (0..n.dim())
                .map(|j| {
                    sparse::collect(m.transpose().row(j).iter().map(|(t, c)| (local[*t], c.clone())))
                })
                .collect()
        })
        .collect();
    let mut tower = Tower {
        n,
        k,
        local,
        negative: negative.clone(),
        maps: vec![degree0],
    };
    let mut dims: BTreeMap<i32, usize> = (1..=k).map(|d| (-d, negative[(d - 1) as usize].len())).collect();
    dims.insert(0, tower.maps[0].len());
    if tower.maps[0].is_empty() {
        return Ok(ProlongationResult {
            component_dims: dims,
            terminated: true,
            truncated_at: None,
        });
    }
    for l in 1..=max_degree as i32 {
        let maps = prolong_step(&tower, &expressions, l);
        if maps.is_empty() {
            return Ok(ProlongationResult {
                component_dims: dims,
                terminated: true,
                truncated_at: None,
            });
        }
        dims.insert(l, maps.len());
        tower.maps.push(maps);
    }
    Ok(ProlongationResult {
        component_dims: dims,
        terminated: false,
        truncated_at: Some(max_degree as i32),
    })
}

fn prolong_step(t: &Tower, expressions: &BTreeMap<usize, BracketExpression>, l: i32) -> Maps {
    let n = t.n;
    let gens = &t.negative[0];
    let src = l - 1;
    let width = t.dim(src);
    let unknowns = gens.len() * width;
    // φ(e_j) as expressions, filled by increasing depth
    let mut phi: Vec<Expr> = vec![Vec::new(); n.dim()];
    for (gi, &g) in gens.iter().enumerate() {
        phi[g] = (0..unknowns)
            .map(|u| if u / width == gi { vec![(u % width, q(1))] } else { Vec::new() })
            .collect();
    }
    for comp in &t.negative[1..] {
        for &j in comp {
            let mut e: Expr = vec![Vec::new(); unknowns];
            for (a, w, c) in &expressions[&j] {
                // [φe_a, e_w] + [e_a, φe_w] = [φe_a, e_w] − [φe_w, e_a]
                let left = expr_bracket(t, src, &phi[*a], *w);
                let right = expr_bracket(t, l + n.degree(*w), &phi[*w], *a);
                e = expr_add(&e, c, &left);
                e = expr_add(&e, &-c.clone(), &right);
            }
            phi[j] = e;
        }
    }
    // φ[e_i,e_j] − [φe_i, e_j] + [φe_j, e_i] = 0
    let mut rows: Vec<SparseVec<Q>> = Vec::new();
    for i in 0..n.dim() {
        for j in i + 1..n.dim() {
            let mut lhs: Expr = vec![Vec::new(); unknowns];
            for (s, c) in n.bracket_basis(i, j) {
                lhs = expr_add(&lhs, c, &phi[*s]);
            }
            let a = expr_bracket(t, l + n.degree(i), &phi[i], j);
            let b = expr_bracket(t, l + n.degree(j), &phi[j], i);
            lhs = expr_add(&lhs, &q(-1), &a);
            lhs = expr_add(&lhs, &q(1), &b);
            let mut by_coord: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
            for (u, col) in lhs.iter().enumerate() {
                for (r, c) in col {
                    by_coord.entry(*r).or_default().push((u, c.clone()));
                }
            }
            rows.extend(by_coord.into_values());
        }
    }
    let kernel = RatMatrix::from_sparse_rows(unknowns, rows).kernel();
    kernel
        .basis()
        .iter()
        .map(|sol| {
            (0..n.dim())
                .map(|j| {
                    let mut v = Vec::new();
                    for (u, c) in sol {
                        if !Field::is_zero(c) {
                            v = sparse::axpy(&v, c, &phi[j][*u]);
                        }
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// Degree-by-degree comparison of a prolongation with a graded algebra.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub passed: bool,
    pub terminated: bool,
    /// `(degree, prolongation dim, algebra dim)` where they differ.
    pub mismatches: Vec<(i32, usize, usize)>,
}

pub fn compare_with_algebra(r: &ProlongationResult, g: &GradedLieAlgebra) -> ComparisonReport {
    let mut degrees: Vec<i32> = r.component_dims.keys().copied().collect();
    degrees.extend(-g.k()..=g.k());
    degrees.sort_unstable();
    degrees.dedup();
    let mismatches: Vec<(i32, usize, usize)> = degrees
        .into_iter()
        .map(|d| (d, r.component_dims.get(&d).copied().unwrap_or(0), g.component(d).len()))
        .filter(|(_, a, b)| a != b)
        .collect();
    ComparisonReport {
        passed: mismatches.is_empty() && r.terminated,
        terminated: r.terminated,
        mismatches,
    }
}

/// The grading derivation `e_j ↦ deg(e_j)·e_j`, flattened.
pub fn grading_derivation(n: &GradedLieAlgebra) -> SparseVec<Q> {
    (0..n.dim())
        .map(|j| (j * n.dim() + j, q(n.degree(j) as i64)))
        .collect()
}

/// Prolongation of `(g₋, der₀(g₋))` with the default cap `2k+1`.
pub fn prolong_full(g: &GradedLieAlgebra) -> Result<ProlongationResult> {
    let n = NilpotentGradedAlgebra::negative_part_of(g)?;
    let der = graded_derivations(&n, 0);
    tanaka_prolong(&n, &der.space, 2 * n.k() as usize + 1)
}
