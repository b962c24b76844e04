//! Structural checks and the Killing form.

use rayon::prelude::*;
use serde::Serialize;

use super::GradedLieAlgebra;
use crate::linalg::{q, sparse, Echelon, Field, RatMatrix, SparseVec, Q};
use crate::rational::format_q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub dim: usize,
    pub component_dims: Vec<usize>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub killing_rank: Option<usize>,
}

impl ValidationReport {
    /// No check failed (skipped checks do not count against).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failure_summary(&self) -> String {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| match &c.detail {
                Some(d) => format!("{}: {}", c.name, d),
                None => c.name.clone(),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn check(name: &str, failure: Option<String>) -> Check {
    Check {
        name: name.to_string(),
        status: if failure.is_some() {
            CheckStatus::Fail
        } else {
            CheckStatus::Pass
        },
        detail: failure,
    }
}

fn show(v: &SparseVec<Q>) -> String {
    let terms: Vec<String> = v
        .iter()
        .map(|(i, c)| format!("{}*e{}", format_q(c), i))
        .collect();
    terms.join(" + ")
}

fn degrees_in_range(g: &GradedLieAlgebra) -> Option<String> {
    g.degrees()
        .iter()
        .position(|d| d.abs() > g.k())
        .map(|i| format!("basis element {} has degree {} outside [-{},{}]", i, g.degree(i), g.k(), g.k()))
}

fn antisymmetry(g: &GradedLieAlgebra) -> Option<String> {
    let n = g.dim();
    for i in 0..n {
        for j in i..n {
            let s = sparse::axpy(g.bracket_basis(i, j), &q(1), g.bracket_basis(j, i));
            if !s.is_empty() {
                return Some(format!("[e{i},e{j}] + [e{j},e{i}] = {}", show(&s)));
            }
        }
    }
    None
}

fn grading(g: &GradedLieAlgebra) -> Option<String> {
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let want = g.degree(i) + g.degree(j);
            if let Some((t, _)) = g
                .bracket_basis(i, j)
                .iter()
                .find(|(t, _)| g.degree(*t) != want)
            {
                return Some(format!(
                    "[e{i},e{j}] has a component along e{t} of degree {}, expected {want}",
                    g.degree(*t)
                ));
            }
        }
    }
    None
}

/// First triple `i < j < l` (lexicographically) violating Jacobi, with the
/// nonzero cyclic sum.
pub fn jacobi_violation(g: &GradedLieAlgebra) -> Option<(usize, usize, usize, SparseVec<Q>)> {
    let n = g.dim();
    let lift = |v: &SparseVec<Q>, l: usize| g.bracket(v, &[(l, q(1))]);
    (0..n)
        .into_par_iter()
        .find_map_first(|i| {
            for j in i + 1..n {
                for l in j + 1..n {
                    let a = lift(g.bracket_basis(i, j), l);
                    let b = lift(g.bracket_basis(j, l), i);
                    let c = lift(g.bracket_basis(l, i), j);
                    let s = sparse::axpy(&sparse::axpy(&a, &q(1), &b), &q(1), &c);
                    if !s.is_empty() {
                        return Some((i, j, l, s));
                    }
                }
            }
            None
        })
}

fn generation(g: &GradedLieAlgebra) -> Option<String> {
    let neg = g.negative_indices();
    if neg.is_empty() {
        return Some("g_- is zero".into());
    }
    if g.component(-g.k()).is_empty() {
        return Some(format!("declared depth {} but g_{} is zero", g.k(), -g.k()));
    }
    let gens = g.component(-1);
    let mut total = Echelon::new(g.dim());
    let mut level: Vec<SparseVec<Q>> = gens.iter().map(|&i| vec![(i, q(1))]).collect();
    for v in &level {
        total.insert(v);
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for &a in &gens {
            for v in &level {
                let w = g.bracket_with_basis(a, v);
                if total.insert(&w) {
                    next.push(w);
                }
            }
        }
        level = next;
    }
    (total.rank() != neg.len()).then(|| {
        format!(
            "g_-1 generates a subspace of dimension {} in g_- of dimension {}",
            total.rank(),
            neg.len()
        )
    })
}

/// Antisymmetry, Jacobi, grading and generation of `g₋` by `g₋₁`.
pub fn structural_report(g: &GradedLieAlgebra) -> ValidationReport {
    let mut checks = vec![
        check("degrees_in_range", degrees_in_range(g)),
        check("antisymmetry", antisymmetry(g)),
        check("grading", grading(g)),
    ];
    let jac = jacobi_violation(g).map(|(i, j, l, s)| {
        format!("triple (e{i}, e{j}, e{l}): cyclic sum = {}", show(&s))
    });
    checks.push(check("jacobi", jac));
    checks.push(check("generation", generation(g)));
    ValidationReport {
        algebra: g.name().to_string(),
        dim: g.dim(),
        component_dims: g.component_dims(),
        checks,
        killing_rank: None,
    }
}

/// All structural checks plus nondegeneracy of the Killing form. The latter
/// is skipped for negatively graded (hence nilpotent) algebras.
pub fn validate(g: &GradedLieAlgebra) -> ValidationReport {
    let mut report = structural_report(g);
    let rank = killing_form(g).rank();
    report.killing_rank = Some(rank);
    let semisimple = if g.degrees().iter().all(|d| *d < 0) {
        Check {
            name: "killing_nondegenerate".into(),
            status: CheckStatus::Skipped,
            detail: Some("negatively graded algebra".into()),
        }
    } else {
        check(
            "killing_nondegenerate",
            (rank != g.dim()).then(|| format!("Killing form has rank {rank} < {}", g.dim())),
        )
    };
    report.checks.push(semisimple);
    report
}

/// `B(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
pub fn killing_form(g: &GradedLieAlgebra) -> RatMatrix {
    let n = g.dim();
    let rows: Vec<Vec<Q>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = q(0);
                    for b in 0..n {
                        for (a, c) in g.bracket_basis(i, b) {
                            let d = sparse::get(g.bracket_basis(j, *a), b);
                            if !Field::is_zero(&d) {
                                acc += c * &d;
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    RatMatrix::from_dense(rows).expect("square")
}
