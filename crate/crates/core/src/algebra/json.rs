//! JSON form of an algebra:
//! `{"name", "dim", "k", "degrees", "brackets": [[i, j, [[t, "p/q"], …]], …]}`
//! with `i < j`. An optional `"cartan"` array lists torus elements as
//! sparse coordinate vectors in the same `[[t, "p/q"], …]` form.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::linalg::{sparse, SparseVec, Q};
use crate::rational::{format_q, parse_q};

pub type SparseJson = Vec<(usize, String)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub k: i32,
    pub degrees: Vec<i32>,
    pub brackets: Vec<(usize, usize, SparseJson)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cartan: Vec<SparseJson>,
}

pub fn sparse_to_json(v: &[(usize, Q)]) -> SparseJson {
    v.iter().map(|(i, x)| (*i, format_q(x))).collect()
}

pub fn sparse_from_json(v: &SparseJson, dim: usize) -> Result<SparseVec<Q>> {
    let mut out = Vec::with_capacity(v.len());
    for (i, s) in v {
        if *i >= dim {
            return input(format!("coordinate index {i} out of range for dimension {dim}"));
        }
        out.push((*i, parse_q(s)?));
    }
    Ok(sparse::collect(out))
}

impl GradedLieAlgebra {
    pub fn to_json_value(&self) -> AlgebraJson {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if !v.is_empty() {
                    brackets.push((i, j, sparse_to_json(v)));
                }
            }
        }
        AlgebraJson {
            name: self.name().to_string(),
            dim: n,
            k: self.k(),
            degrees: self.degrees().to_vec(),
            brackets,
            cartan: self.cartan().iter().map(|h| sparse_to_json(h)).collect(),
        }
    }

    /// Pairs with `i ≥ j` are kept as given rather than mirrored, so that
    /// [`super::validate`] can report the resulting antisymmetry failure.
    pub fn from_json_value(j: &AlgebraJson) -> Result<Self> {
        let n = j.dim;
        if j.degrees.len() != n {
            return input(format!("dim is {n} but {} degrees given", j.degrees.len()));
        }
        let mut seen = BTreeSet::new();
        let mut table = vec![vec![Vec::new(); n]; n];
        let mut raw = Vec::new();
        for (a, b, v) in &j.brackets {
            if *a >= n || *b >= n {
                return input(format!("bracket index out of range in [{a},{b}]"));
            }
            if !seen.insert((*a, *b)) {
                return input(format!("bracket [{a},{b}] listed twice"));
            }
            let v = sparse_from_json(v, n)?;
            if a < b {
                table[*b][*a] = sparse::neg(&v);
                table[*a][*b] = v;
            } else {
                raw.push((*a, *b, v));
            }
        }
        for (a, b, v) in raw {
            table[a][b] = v;
        }
        let cartan = j
            .cartan
            .iter()
            .map(|h| sparse_from_json(h, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedLieAlgebra::from_table(j.name.clone(), j.k, j.degrees.clone(), table)?.with_cartan(cartan))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(s)?;
        Self::from_json_value(&j)
    }
}
