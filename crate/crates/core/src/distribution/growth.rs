//! Derived flag, growth vector and symbol algebra at a point.

use serde::Serialize;

use super::poly::{field_bracket, PolyVectorField};
use crate::algebra::{GradedLieAlgebra, NilpotentGradedAlgebra};
use crate::error::{input, Error, Result};
use crate::linalg::{sparse, Echelon, SparseVec, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthVector {
    /// `dim T^{-1}_x < dim T^{-2}_x < …`, up to stabilization.
    pub dims: Vec<usize>,
    /// The last level added nothing new, or the full tangent space was
    /// reached.
    pub stabilized: bool,
}

impl GrowthVector {
    pub fn is_bracket_generating(&self, m: usize) -> bool {
        self.dims.last() == Some(&m)
    }
}

/// Fields by level: level 1 is the input, level `ℓ+1` holds brackets of
/// level-`ℓ` fields with level-1 fields.
struct Flag {
    levels: Vec<Vec<PolyVectorField>>,
    /// Fields chosen to extend the span at the point, with their level.
    adapted: Vec<(usize, PolyVectorField)>,
    echelon: Echelon<Q>,
    growth: GrowthVector,
}

fn check_point(fields: &[PolyVectorField], point: &[Q]) -> Result<usize> {
    let Some(first) = fields.first() else {
        return input("no fields given");
    };
    let m = first.num_vars();
    if fields.iter().any(|f| f.num_vars() != m) {
        return input("fields live on different spaces");
    }
    if point.len() != m {
        return input(format!("point has {} coordinates, fields live on R^{m}", point.len()));
    }
    Ok(m)
}

fn derived_flag(fields: &[PolyVectorField], point: &[Q], depth_cap: usize) -> Result<Flag> {
    let m = check_point(fields, point)?;
    let mut flag = Flag {
        levels: vec![fields.to_vec()],
        adapted: Vec::new(),
        echelon: Echelon::new(m),
        growth: GrowthVector { dims: Vec::new(), stabilized: false },
    };
    for f in fields {
        if flag.echelon.insert(&sparse::from_dense(&f.eval(point))) {
            flag.adapted.push((1, f.clone()));
        }
    }
    flag.growth.dims.push(flag.echelon.rank());
    while flag.levels.len() < depth_cap.max(1) {
        if flag.echelon.rank() == m {
            flag.growth.stabilized = true;
            return Ok(flag);
        }
        let level = flag.levels.len() + 1;
        let prev = flag.levels.last().expect("level 1");
        let mut next = Vec::new();
        for (a, y) in prev.iter().enumerate() {
            for (b, x) in fields.iter().enumerate() {
                if level == 2 && b <= a {
                    continue;
                }
                let z = field_bracket(y, x)?;
                if !z.is_zero() {
                    next.push(z);
                }
            }
        }
        let before = flag.echelon.rank();
        for f in &next {
            if flag.echelon.insert(&sparse::from_dense(&f.eval(point))) {
                flag.adapted.push((level, f.clone()));
            }
        }
        flag.levels.push(next);
        if flag.echelon.rank() == before {
            flag.growth.stabilized = true;
            return Ok(flag);
        }
        flag.growth.dims.push(flag.echelon.rank());
    }
    flag.growth.stabilized = flag.echelon.rank() == m;
    Ok(flag)
}

/// Ranks of the derived flag at `point`; `stabilized` is false when
/// `depth_cap` levels were exhausted first.
pub fn growth_vector_at(fields: &[PolyVectorField], point: &[Q], depth_cap: usize) -> Result<GrowthVector> {
    Ok(derived_flag(fields, point, depth_cap)?.growth)
}

/// The graded nilpotent algebra `gr(T_x M)` with its Levi bracket, together
/// with the fields whose values give the adapted basis.
#[derive(Clone, Debug)]
pub struct SymbolAlgebra {
    pub algebra: NilpotentGradedAlgebra,
    pub adapted_fields: Vec<PolyVectorField>,
    pub growth: GrowthVector,
}

impl std::ops::Deref for SymbolAlgebra {
    type Target = GradedLieAlgebra;
    fn deref(&self) -> &GradedLieAlgebra {
        &self.algebra
    }
}

pub fn symbol_at(fields: &[PolyVectorField], point: &[Q]) -> Result<SymbolAlgebra> {
    let m = check_point(fields, point)?;
    let flag = derived_flag(fields, point, m)?;
    if !flag.growth.is_bracket_generating(m) {
        return Err(Error::Input(format!(
            "fields are not bracket generating at the point; growth stalls at {:?}",
            flag.growth.dims
        )));
    }
    // basis ordered by decreasing level so degrees are nondecreasing
    let mut order: Vec<usize> = (0..flag.adapted.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(flag.adapted[i].0));
    let degrees: Vec<i32> = order.iter().map(|&i| -(flag.adapted[i].0 as i32)).collect();
    let fields_ordered: Vec<&PolyVectorField> = order.iter().map(|&i| &flag.adapted[i].1).collect();
    let mut values = Echelon::with_tracking(m);
    for f in &fields_ordered {
        values.insert(&sparse::from_dense(&f.eval(point)));
    }
    let k = flag.growth.dims.len() as i32;
    let mut brackets: Vec<(usize, usize, SparseVec<Q>)> = Vec::new();
    for a in 0..fields_ordered.len() {
        for b in a + 1..fields_ordered.len() {
            let target = degrees[a] + degrees[b];
            if target < -k {
                continue;
            }
            let z = field_bracket(fields_ordered[a], fields_ordered[b])?;
            let coords = values
                .express(&sparse::from_dense(&z.eval(point)))
                .expect("adapted basis spans the tangent space");
            let graded: SparseVec<Q> = coords.into_iter().filter(|(t, _)| degrees[*t] == target).collect();
            if !graded.is_empty() {
                brackets.push((a, b, graded));
            }
        }
    }
    let g = GradedLieAlgebra::from_brackets("symbol", k, degrees, brackets)?;
    Ok(SymbolAlgebra {
        algebra: NilpotentGradedAlgebra::new(g)?,
        adapted_fields: fields_ordered.into_iter().cloned().collect(),
        growth: flag.growth,
    })
}
