//! Incremental row echelon form over an arbitrary field.

use std::collections::{BTreeMap, HashMap};

use super::field::Field;
use super::sparse::{self, SparseVec};

/// Semi-echelon basis built one vector at a time.
///
/// Every stored row has leading coefficient one at a distinct pivot column.
/// When tracking is enabled, each row also remembers how it is written in
/// terms of the vectors passed to [`Echelon::insert`], which makes
/// [`Echelon::express`] possible.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    dim: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
    track: Option<Vec<SparseVec<F>>>,
    inserted: usize,
}

impl<F: Field> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: HashMap::new(),
            track: None,
            inserted: 0,
        }
    }

    pub fn with_tracking(dim: usize) -> Self {
        Echelon {
            track: Some(Vec::new()),
            ..Echelon::new(dim)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Reduces `v` against all rows. With `full == false` the reduction stops
    /// at the first leading column without a pivot. Returns the remainder and
    /// the multipliers `(row, c)` subtracted along the way.
    fn reduce_impl(&self, v: &[(usize, F)], full: bool) -> (SparseVec<F>, Vec<(usize, F)>) {
        let mut work: BTreeMap<usize, F> = v.iter().cloned().collect();
        let mut used = Vec::new();
        let mut cursor = 0usize;
        loop {
            let next = if full {
                work.range(cursor..)
                    .find(|(c, _)| self.pivot_row.contains_key(c))
            } else {
                work.range(cursor..).next()
            }
            .map(|(c, x)| (*c, x.clone()));
            let Some((col, coef)) = next else { break };
            let Some(&r) = self.pivot_row.get(&col) else {
                break;
            };
            for (j, x) in &self.rows[r] {
                let e = work.entry(*j).or_insert_with(F::zero);
                e.sub_mul_assign(&coef, x);
                if e.is_zero() {
                    work.remove(j);
                }
            }
            used.push((r, coef));
            cursor = col + 1;
        }
        (work.into_iter().collect(), used)
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        self.reduce_impl(v, true).0
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce_impl(v, false).0.is_empty()
    }

    /// Inserts `v`; returns `true` if it was independent of the current rows.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce_impl(v, false);
        if rem.is_empty() {
            return false;
        }
        let lead = rem[0].0;
        let inv = rem[0].1.inv();
        let row = sparse::scale(&rem, &inv);
        if let Some(track) = self.track.as_mut() {
            let mut comb: SparseVec<F> = vec![(idx, F::one())];
            for (r, c) in &used {
                comb = sparse::axpy(&comb, &c.neg(), &track[*r]);
            }
            track.push(sparse::scale(&comb, &inv));
        }
        self.pivot_row.insert(lead, self.rows.len());
        self.pivots.push(lead);
        self.rows.push(row);
        true
    }

    /// Coordinates of `v` with respect to the inserted vectors (dependent
    /// insertions get coefficient zero). `None` if `v` is not in the span.
    /// Requires tracking.
    pub fn express(&self, v: &[(usize, F)]) -> Option<SparseVec<F>> {
        let track = self
            .track
            .as_ref()
            .expect("express requires an echelon built with tracking");
        let (rem, used) = self.reduce_impl(v, false);
        if !rem.is_empty() {
            return None;
        }
        let mut out: SparseVec<F> = Vec::new();
        for (r, c) in &used {
            out = sparse::axpy(&out, c, &track[*r]);
        }
        Some(out)
    }

    /// Reduced row echelon basis of the span, rows sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec<F>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivots[r]);
        let mut done: Vec<SparseVec<F>> = vec![Vec::new(); self.rows.len()];
        let mut pos_of_col: HashMap<usize, usize> = HashMap::new();
        // back substitution: rows with larger pivots are finished first
        for (pos, &r) in order.iter().enumerate().rev() {
            let mut row = self.rows[r].clone();
            let targets: Vec<usize> = row
                .iter()
                .skip(1)
                .map(|(c, _)| *c)
                .filter(|c| pos_of_col.contains_key(c))
                .collect();
            for c in targets {
                let coef = sparse::get(&row, c);
                if !coef.is_zero() {
                    row = sparse::axpy(&row, &coef.neg(), &done[pos_of_col[&c]]);
                }
            }
            pos_of_col.insert(self.pivots[r], pos);
            done[pos] = row;
        }
        done
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{q, Q};

    fn sv(v: &[i64]) -> SparseVec<Q> {
        sparse::from_dense(&v.iter().map(|x| q(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let mut e = Echelon::<Q>::new(2);
        assert!(e.insert(&sv(&[1, 2])));
        assert!(!e.insert(&sv(&[2, 4])));
        assert!(e.insert(&sv(&[0, 1])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn express_recovers_coefficients() {
        let mut e = Echelon::<Q>::with_tracking(3);
        e.insert(&sv(&[1, 1, 0]));
        e.insert(&sv(&[0, 1, 1]));
        let c = e.express(&sv(&[2, 5, 3])).unwrap();
        assert_eq!(c, vec![(0, q(2)), (1, q(3))]);
        assert!(e.express(&sv(&[0, 0, 1])).is_none());
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::<Q>::new(3);
        e.insert(&sv(&[1, 2, 3]));
        e.insert(&sv(&[0, 1, 4]));
        let r = e.rref();
        assert_eq!(r[0], sv(&[1, 0, -5]));
        assert_eq!(r[1], sv(&[0, 1, 4]));
    }
}
