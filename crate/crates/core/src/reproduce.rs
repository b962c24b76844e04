//! Recomputes the reference values listed in `data/expected.json` and
//! compares them with the stored expectations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{so_v_index, validate, Family, GradedLieAlgebra, NilpotentGradedAlgebra};
use crate::cohomology::{cohomology_dims, h1_negative_test, max_stabilizer_probe, CochainComplex, H2};
use crate::distribution::{classify_rank4, genericity_test, growth_vector_at, model_fields, symbol_at, SymbolFamily};
use crate::error::{input, Result};
use crate::linalg::{q, SparseVec, Subspace, Q};
use crate::prolongation::prolong_full;
use crate::subalgebra::{gap_scan, subspace_stabilizer_dim, verify_subalgebra, witness_catalog};

pub const EXPECTED_JSON: &str = include_str!("../data/expected.json");

/// Random trials used by the stabilizer probe.
pub const PROBE_TRIALS: usize = 32;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expected {
    pub version: u32,
    pub families: Vec<FamilyExpected>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyExpected {
    pub key: String,
    pub algebra: String,
    pub symbol_family: SymbolFamily,
    pub checks: Vec<ExpectedCheck>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpectedCheck {
    pub criterion: u8,
    pub quantity: String,
    pub expected: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<(usize, usize)>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub family: String,
    pub criterion: u8,
    pub quantity: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

pub fn expected() -> Result<Expected> {
    Ok(serde_json::from_str(EXPECTED_JSON)?)
}

/// `{"min": m}` accepts any count `≥ m`; anything else must match exactly.
pub fn matches(expected: &Value, computed: &Value) -> bool {
    match expected.get("min").and_then(Value::as_u64) {
        Some(m) => computed.as_u64().is_some_and(|c| c >= m),
        None => expected == computed,
    }
}

struct Context<'a> {
    fam: &'a FamilyExpected,
    g: GradedLieAlgebra,
    seed: u64,
    trials: usize,
    h2: Option<H2>,
}

impl Context<'_> {
    fn h2(&mut self) -> Result<&H2> {
        if self.h2.is_none() {
            self.h2 = Some(H2::compute(&self.g)?);
        }
        Ok(self.h2.as_ref().expect("computed"))
    }

    fn model_symbol(&self) -> Result<crate::distribution::SymbolAlgebra> {
        let n = NilpotentGradedAlgebra::negative_part_of(&self.g)?;
        symbol_at(&model_fields(&n), &vec![q(0); n.dim()])
    }

    fn compute(&mut self, check: &ExpectedCheck) -> Result<Value> {
        let g = &self.g;
        let quantity = check.quantity.as_str();
        let v = match quantity {
            "dim" => json!(g.dim()),
            "grading" => json!(g.component_dims()),
            "valid" => json!(validate(g).passed()),
            "h1_negative" => json!(h1_negative_test(g)?),
            "h2_total" => json!(cohomology_dims(g, 2)?.total),
            "h2_pieces" => json!(cohomology_dims(g, 2)?.by_homogeneity.len()),
            "h2_by_homogeneity" => {
                let t = cohomology_dims(g, 2)?;
                let m: BTreeMap<String, usize> = t.by_homogeneity.iter().map(|(h, d)| (h.to_string(), *d)).collect();
                json!(m)
            }
            "probe_best" => {
                let seed = self.seed;
                json!(max_stabilizer_probe(self.h2()?, seed, PROBE_TRIALS)?.best_dim)
            }
            "prolongation_dims" => {
                let r = prolong_full(g)?;
                let dims: Vec<usize> = r.component_dims.values().copied().collect();
                if r.terminated {
                    json!(dims)
                } else {
                    json!({"dims": dims, "terminated": false})
                }
            }
            "gap_violations" => {
                let Some(forbidden) = check.forbidden else {
                    return input("gap check without a forbidden interval");
                };
                json!(gap_scan(g, forbidden, self.trials, self.seed)?.violations.len())
            }
            "stabilizer_formula" => {
                let Some(Family::SoSplit(n)) = Family::detect(g.name()) else {
                    return input("stabilizer formula applies to so-split algebras");
                };
                let dims = (1..n)
                    .map(|l| {
                        let vs: Vec<SparseVec<Q>> = (0..l).map(|a| vec![(so_v_index(n, a), q(1))]).collect();
                        subspace_stabilizer_dim(g, 1, &Subspace::span(g.dim(), &vs))
                    })
                    .collect::<Result<Vec<_>>>()?;
                json!(dims)
            }
            "growth" => {
                let n = NilpotentGradedAlgebra::negative_part_of(g)?;
                json!(growth_vector_at(&model_fields(&n), &vec![q(0); n.dim()], n.dim())?.dims)
            }
            "generic" => json!(genericity_test(&*self.model_symbol()?, self.fam.symbol_family).passed),
            "rank4_class" => json!(classify_rank4(&*self.model_symbol()?)?.class),
            "d_squared_zero" => json!(d_squared_zero(g, 3)?),
            "euler" => json!(euler_identity(g)?),
            _ => match quantity.strip_prefix("witness:") {
                Some(name) => {
                    let cat = witness_catalog(g)?;
                    let Some(w) = cat.iter().find(|w| w.name == name) else {
                        return input(format!("no witness named {name}"));
                    };
                    let r = verify_subalgebra(&w.subalgebra);
                    if r.closed && r.proper {
                        json!(r.dim)
                    } else {
                        json!({"dim": r.dim, "closed": r.closed, "proper": r.proper})
                    }
                }
                None => return input(format!("unknown quantity {quantity}")),
            },
        };
        Ok(v)
    }
}

/// `∂∘∂ = 0` on every slice with `q ≤ max_q`.
pub fn d_squared_zero(g: &GradedLieAlgebra, max_q: usize) -> Result<bool> {
    let c = CochainComplex::new(g)?;
    for qd in 0..=max_q.min(c.negative().len()) {
        for h in c.homogeneities(qd) {
            let s = c.slice(qd, h);
            if !s.d_out.mul(&s.d_in)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Σ (−1)^q dim C^q(h) = Σ (−1)^q dim H^q(h)` for every homogeneity.
pub fn euler_identity(g: &GradedLieAlgebra) -> Result<bool> {
    let c = CochainComplex::new(g)?;
    let mut chains: BTreeMap<i32, i64> = BTreeMap::new();
    let mut homs: BTreeMap<i32, i64> = BTreeMap::new();
    for qd in 0..=c.negative().len() {
        let sign = if qd % 2 == 0 { 1 } else { -1 };
        for h in c.homogeneities(qd) {
            *chains.entry(h).or_default() += sign * c.space(qd, h).dim() as i64;
            *homs.entry(h).or_default() += sign * c.cohomology_dim(qd, h) as i64;
        }
    }
    Ok(chains == homs)
}

/// Rows for the selected family keys (all when `None`).
pub fn reproduce(keys: Option<&[String]>, seed: u64, trials: usize) -> Result<Vec<Row>> {
    let exp = expected()?;
    if let Some(keys) = keys {
        for k in keys {
            if !exp.families.iter().any(|f| &f.key == k) {
                return input(format!("unknown family key {k:?}"));
            }
        }
    }
    let mut rows = Vec::new();
    for fam in &exp.families {
        if keys.is_some_and(|ks| !ks.contains(&fam.key)) {
            continue;
        }
        let g = Family::from_alias(&fam.algebra, None)?.build()?;
        let mut ctx = Context { fam, g, seed, trials, h2: None };
        for check in &fam.checks {
            let computed = ctx.compute(check)?;
            rows.push(Row {
                family: fam.key.clone(),
                criterion: check.criterion,
                quantity: check.quantity.clone(),
                pass: matches(&check.expected, &computed),
                expected: check.expected.clone(),
                computed,
            });
        }
    }
    Ok(rows)
}
