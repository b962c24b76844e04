//! Polynomials with rational coefficients and polynomial vector fields.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::linalg::{q, Field, Q};
use crate::rational::{format_q, parse_q};

/// A polynomial in `m` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Q) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, q(1));
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars {
                return input(format!("exponent vector of length {} in {vars} variables", e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.vars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(s, t)| s + t).collect();
                p.add_term(e, x.mul(y));
            }
        }
        p
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut p = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c.mul(&q(e[i] as i64)));
            }
        }
        p
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e) {
                for _ in 0..*k {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// `Σ_i P_i ∂_i` on `ℝ^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    pub components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        let m = components.len();
        if components.iter().any(|p| p.vars() != m) {
            return input("component polynomials must have as many variables as components");
        }
        Ok(PolyVectorField { components })
    }

    pub fn zero(vars: usize) -> Self {
        PolyVectorField { components: vec![Poly::zero(vars); vars] }
    }

    /// The coordinate field `∂_i`.
    pub fn coordinate(vars: usize, i: usize) -> Self {
        let mut f = Self::zero(vars);
        f.components[i] = Poly::constant(vars, q(1));
        f
    }

    pub fn num_vars(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        PolyVectorField {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        PolyVectorField {
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// `f · self`.
    pub fn mul_function(&self, f: &Poly) -> Self {
        PolyVectorField {
            components: self.components.iter().map(|a| a.mul(f)).collect(),
        }
    }

    /// Derivative of a function along the field.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut acc = Poly::zero(self.num_vars());
        for (j, c) in self.components.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&f.derivative(j)));
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Q]) -> Vec<Q> {
        self.components.iter().map(|p| p.eval(point)).collect()
    }
}

/// `[X, Y]^i = X(Y^i) − Y(X^i)`.
pub fn field_bracket(x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField> {
    if x.num_vars() != y.num_vars() {
        return input(format!("fields on R^{} and R^{}", x.num_vars(), y.num_vars()));
    }
    let components = (0..x.num_vars())
        .map(|i| x.apply(&y.components[i]).sub(&y.apply(&x.components[i])))
        .collect();
    Ok(PolyVectorField { components })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// Fields JSON: `{"vars": m, "fields": [[[{"coeff", "exps"}, …] × m], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldsJson {
    pub vars: usize,
    pub fields: Vec<Vec<Vec<TermJson>>>,
}

impl FieldsJson {
    pub fn from_fields(fields: &[PolyVectorField]) -> Result<Self> {
        let vars = fields.first().map_or(0, PolyVectorField::num_vars);
        if fields.iter().any(|f| f.num_vars() != vars) {
            return input("fields live on different spaces");
        }
        Ok(FieldsJson {
            vars,
            fields: fields
                .iter()
                .map(|f| {
                    f.components
                        .iter()
                        .map(|p| {
                            p.terms()
                                .iter()
                                .map(|(e, c)| TermJson { coeff: format_q(c), exps: e.clone() })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        })
    }

    pub fn to_fields(&self) -> Result<Vec<PolyVectorField>> {
        self.fields
            .iter()
            .map(|f| {
                if f.len() != self.vars {
                    return input(format!("field with {} components on R^{}", f.len(), self.vars));
                }
                let comps = f
                    .iter()
                    .map(|terms| {
                        let parsed = terms
                            .iter()
                            .map(|t| Ok((t.exps.clone(), parse_q(&t.coeff)?)))
                            .collect::<Result<Vec<_>>>()?;
                        Poly::from_terms(self.vars, parsed)
                    })
                    .collect::<Result<Vec<_>>>()?;
                PolyVectorField::new(comps)
            })
            .collect()
    }
}
