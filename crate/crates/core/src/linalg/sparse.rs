//! Sparse vectors: sorted `(index, value)` lists without explicit zeros.

use std::collections::BTreeMap;

use super::field::Field;

pub type SparseVec<F> = Vec<(usize, F)>;

pub fn from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense<F: Field>(v: &[(usize, F)], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Builds a sparse vector from unsorted, possibly repeated entries.
pub fn collect<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (i, x) in entries {
        if x.is_zero() {
            continue;
        }
        match acc.get_mut(&i) {
            Some(v) => *v = v.add(&x),
            None => {
                acc.insert(i, x);
            }
        }
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// `a + c·b`
pub fn axpy<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SparseVec<F> {
    if c.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.mul(&b[j].1)));
            j += 1;
        } else {
            let v = a[i].1.add(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(v: &[(usize, F)], c: &F) -> SparseVec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x.mul(c))).collect()
}

pub fn neg<F: Field>(v: &[(usize, F)]) -> SparseVec<F> {
    v.iter().map(|(i, x)| (*i, x.neg())).collect()
}

pub fn dot<F: Field>(a: &[(usize, F)], b: &[(usize, F)]) -> F {
    let mut acc = F::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = acc.add(&a[i].1.mul(&b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn get<F: Field>(v: &[(usize, F)], idx: usize) -> F {
    match v.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(p) => v[p].1.clone(),
        Err(_) => F::zero(),
    }
}

/// Maps entries through a field embedding.
pub fn map<F: Field, G: Field>(v: &[(usize, F)], f: impl Fn(&F) -> G) -> SparseVec<G> {
    v.iter()
        .map(|(i, x)| (*i, f(x)))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Re-indexes entries; `f` must be strictly increasing on the support.
pub fn shift<F: Field>(v: &[(usize, F)], offset: usize) -> SparseVec<F> {
    v.iter().map(|(i, x)| (i + offset, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{q, Q};

    #[test]
    fn axpy_cancels() {
        let a: SparseVec<Q> = vec![(0, q(1)), (2, q(3))];
        let b: SparseVec<Q> = vec![(1, q(5)), (2, q(1))];
        let r = axpy(&a, &q(-3), &b);
        assert_eq!(r, vec![(0, q(1)), (1, q(-15))]);
    }

    #[test]
    fn collect_merges_duplicates() {
        let v = collect(vec![(3, q(1)), (1, q(2)), (3, q(-1)), (1, q(1))]);
        assert_eq!(v, vec![(1, q(3))]);
    }
}
