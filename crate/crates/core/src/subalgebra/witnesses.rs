use std::collections::BTreeMap;

use super::{subspace_stabilizer, GradedSubalgebra};
use crate::algebra::{so_b_index, so_gl_index, so_v_index, Family, GradedLieAlgebra};
use crate::error::{input, Result};
use crate::linalg::{q, Subspace};

#[derive(Clone, Debug)]
pub struct Witness<'a> {
    pub name: String,
    pub subalgebra: GradedSubalgebra<'a>,
}

fn so_rank(g: &GradedLieAlgebra) -> Result<usize> {
    match Family::detect(g.name()) {
        Some(Family::SoSplit(n)) => Ok(n),
        _ => input(format!("{} is not a built-in so-split algebra", g.name())),
    }
}

/// `b^k = g₋ ⊕ stab(ℝ^k) ⊕ ℝ^k ⊕ Λ²ℝ^k` inside `so-split-n`, where
/// `ℝ^k ⊆ g₁` is spanned by `V_a`, `a < k`.
pub fn witness_bk(g: &GradedLieAlgebra, k: usize) -> Result<GradedSubalgebra<'_>> {
    let n = so_rank(g)?;
    if k < 1 || k >= n {
        return input(format!("k = {k} outside 1..={}", n - 1));
    }
    let mut idx: Vec<usize> = g.component(-2);
    idx.extend(g.component(-1));
    for a in 0..n {
        for b in 0..n {
            if !(a >= k && b < k) {
                idx.push(so_gl_index(n, a, b));
            }
        }
    }
    idx.extend((0..k).map(|a| so_v_index(n, a)));
    for a in 0..k {
        for b in a + 1..k {
            idx.push(so_b_index(n, a, b));
        }
    }
    GradedSubalgebra::from_basis_indices(g, idx)
}

fn by_degree<'a>(g: &'a GradedLieAlgebra, keep: impl Fn(i32) -> bool) -> GradedSubalgebra<'a> {
    GradedSubalgebra::from_basis_indices(g, (0..g.dim()).filter(|&i| keep(g.degree(i)))).expect("basis of g")
}

/// Named proper graded subalgebras of maximal dimension for a built-in
/// family, together with `p` and `g₋ ⊕ g₀`.
pub fn witness_catalog(g: &GradedLieAlgebra) -> Result<Vec<Witness<'_>>> {
    let Some(family) = Family::detect(g.name()) else {
        return input(format!("{} is not a built-in family", g.name()));
    };
    let mut out = vec![
        Witness {
            name: "parabolic".into(),
            subalgebra: by_degree(g, |d| d >= 0),
        },
        Witness {
            name: "negative-plus-zero".into(),
            subalgebra: by_degree(g, |d| d <= 0),
        },
    ];
    match family {
        Family::SoSplit(n) => out.push(Witness {
            name: format!("b^{}", n - 1),
            subalgebra: witness_bk(g, n - 1)?,
        }),
        Family::G2Split => {
            let e = g.component(1)[0];
            let line = Subspace::span(g.dim(), &[vec![(e, q(1))]]);
            let b0 = subspace_stabilizer(g, 1, &line)?;
            let mut comps: BTreeMap<i32, Subspace> = BTreeMap::new();
            for d in 1..=3 {
                comps.insert(-d, g.component_subspace(-d));
            }
            comps.insert(0, b0);
            comps.insert(1, line);
            out.push(Witness {
                name: "line-stabilizer".into(),
                subalgebra: GradedSubalgebra::new(g, comps)?,
            });
        }
        Family::Sp6Split => {
            // A11 upper triangular, all of A22, A12 with zero second row,
            // A13 a multiple of E12
            let a11 = g.component(0);
            let a12 = g.component(1);
            let a13 = g.component(2);
            let mut idx: Vec<usize> = g.component(-2);
            idx.extend(g.component(-1));
            idx.extend([a11[0], a11[1], a11[3], a11[4], a11[5], a11[6]]);
            idx.extend([a12[0], a12[1]]);
            idx.push(a13[1]);
            out.push(Witness {
                name: "upper-triangular".into(),
                subalgebra: GradedSubalgebra::from_basis_indices(g, idx)?,
            });
        }
        Family::Sp21 => {}
    }
    Ok(out)
}
