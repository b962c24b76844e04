//! Genericity criteria for symbol algebras and the elliptic/hyperbolic
//! dichotomy for rank-four symbols in dimension seven.

use serde::{Deserialize, Serialize};

use crate::algebra::derivations::{flatten_map, to_matrix};
use crate::algebra::{graded_derivations, Check, CheckStatus, GradedLieAlgebra};
use crate::error::{input, Result};
use crate::linalg::{signature, Field, RatMatrix, SparseVec, Subspace, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolFamily {
    SoN,
    G2,
    Rank4,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericityReport {
    pub family: SymbolFamily,
    pub passed: bool,
    pub dims: Vec<usize>,
    pub checks: Vec<Check>,
}

fn dims_of(s: &GradedLieAlgebra) -> Vec<usize> {
    (1..=s.k()).map(|d| s.component(-d).len()).collect()
}

/// Rank of the bracket `g_a ⊗ g_b → g_{a+b}` (`Λ²` when `a = b`).
pub fn levi_rank(s: &GradedLieAlgebra, a: i32, b: i32) -> usize {
    let (ia, ib) = (s.component(a), s.component(b));
    let mut cols: Vec<SparseVec<Q>> = Vec::new();
    for &x in &ia {
        for &y in &ib {
            if a == b && y <= x {
                continue;
            }
            cols.push(s.bracket_basis(x, y).clone());
        }
    }
    RatMatrix::from_sparse_rows(s.dim(), cols).rank()
}

fn check(name: &str, ok: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail: Some(detail),
    }
}

pub fn genericity_test(s: &GradedLieAlgebra, family: SymbolFamily) -> GenericityReport {
    let dims = dims_of(s);
    let mut checks = Vec::new();
    match family {
        SymbolFamily::SoN => {
            let n = dims.first().copied().unwrap_or(0);
            let want = vec![n, n * n.saturating_sub(1) / 2];
            checks.push(check("dims", dims == want, format!("{dims:?}, expected {want:?}")));
            if dims == want {
                let r = levi_rank(s, -1, -1);
                checks.push(check("levi_iso", r == want[1], format!("rank of the Levi bracket {r}")));
            }
        }
        SymbolFamily::G2 => {
            let want = vec![2, 1, 2];
            checks.push(check("dims", dims == want, format!("{dims:?}, expected {want:?}")));
            if dims == want {
                let r2 = levi_rank(s, -1, -1);
                let r3 = levi_rank(s, -1, -2);
                checks.push(check("levi_iso_2", r2 == 1, format!("rank {r2}")));
                checks.push(check("levi_iso_3", r3 == 2, format!("rank {r3}")));
            }
        }
        SymbolFamily::Rank4 => {
            let want = vec![4, 3];
            checks.push(check("dims", dims == want, format!("{dims:?}, expected {want:?}")));
            if dims == want {
                let d = graded_derivations(s, 0).len();
                checks.push(check("der0_dim", d == 7, format!("dim der0 = {d}")));
            }
        }
    }
    GenericityReport {
        family,
        passed: checks.iter().all(|c| c.status == CheckStatus::Pass),
        dims,
        checks,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rank4Type {
    Elliptic,
    Hyperbolic,
    NonGeneric,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank4Report {
    pub class: Rank4Type,
    pub der0_dim: usize,
    /// Dimension of the space of quadratic forms on degree −1 killed by
    /// `[der₀, der₀]`.
    pub invariant_forms: usize,
    /// `(positive, negative, zero)` of the invariant form, when unique.
    pub signature: Option<(usize, usize, usize)>,
    pub detail: String,
}

/// Matrix of a degree-zero map restricted to the degree −1 component.
fn restrict(m: &RatMatrix, idx: &[usize]) -> RatMatrix {
    let n = idx.len();
    let mut out = RatMatrix::zeros(n, n);
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            out.set(r, c, m.get(i, j));
        }
    }
    out
}

fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

/// `AᵀQ + QA` as linear rows in the `n(n+1)/2` entries of `Q`.
fn congruence_rows(a: &RatMatrix, rows: &mut Vec<SparseVec<Q>>) {
    let n = a.nrows();
    for r in 0..n {
        for c in r..n {
            let mut row: Vec<(usize, Q)> = Vec::new();
            for s in 0..n {
                let x = a.get(s, r);
                if !x.is_zero() {
                    row.push((sym_index(n, s, c), x));
                }
                let y = a.get(s, c);
                if !y.is_zero() {
                    row.push((sym_index(n, r, s), y));
                }
            }
            rows.push(crate::linalg::sparse::collect(row));
        }
    }
}

fn form_matrix(n: usize, v: &[(usize, Q)]) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = crate::linalg::sparse::get(v, sym_index(n, i, j));
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    m
}

/// Finds the conformal class on degree −1 preserved by `der₀`: a quadratic
/// form killed by the derived algebra `[der₀, der₀]` whose line every
/// element of `der₀` preserves. Definite forms give the elliptic type and
/// split forms the hyperbolic type.
pub fn classify_rank4(s: &GradedLieAlgebra) -> Result<Rank4Report> {
    let dims = dims_of(s);
    if dims != [4, 3] {
        return input(format!("rank-four classification needs dims (4,3), got {dims:?}"));
    }
    let der = graded_derivations(s, 0);
    let mats = der.matrices();
    let idx = s.component(-1);
    let mut report = Rank4Report {
        class: Rank4Type::NonGeneric,
        der0_dim: mats.len(),
        invariant_forms: 0,
        signature: None,
        detail: String::new(),
    };
    let mut commutators = Vec::new();
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            commutators.push(flatten_map(&a.mul(b)?.sub(&b.mul(a)?)?));
        }
    }
    let derived = Subspace::span(s.dim() * s.dim(), &commutators);
    let mut rows = Vec::new();
    for v in derived.basis() {
        congruence_rows(&restrict(&to_matrix(s.dim(), v), &idx), &mut rows);
    }
    let forms = RatMatrix::from_sparse_rows(10, rows).kernel();
    report.invariant_forms = forms.dim();
    if report.der0_dim != 7 {
        report.detail = format!("der0 has dimension {}, not 7", report.der0_dim);
        return Ok(report);
    }
    if forms.dim() != 1 {
        report.detail = format!("{} independent invariant forms", forms.dim());
        return Ok(report);
    }
    let lead = forms.basis()[0][0].clone();
    let qm = form_matrix(4, &forms.basis()[0]);
    let (p, piv) = (0..4)
        .flat_map(|i| (i..4).map(move |j| (i, j)))
        .find(|&(i, j)| sym_index(4, i, j) == lead.0)
        .expect("pivot entry");
    for m in &mats {
        let a = restrict(m, &idx);
        let moved = a.transpose().mul(&qm)?.add(&qm.mul(&a)?)?;
        let lambda = moved.get(p, piv).div(&lead.1);
        if moved != qm.scale(&lambda) {
            report.detail = "der0 does not preserve the conformal class".into();
            return Ok(report);
        }
    }
    let sig = signature(&qm)?;
    report.signature = Some(sig);
    report.class = match sig {
        (4, 0, 0) | (0, 4, 0) => Rank4Type::Elliptic,
        (2, 2, 0) => Rank4Type::Hyperbolic,
        _ => Rank4Type::NonGeneric,
    };
    report.detail = format!("invariant form of signature {sig:?}");
    Ok(report)
}
