//! Fraction-free elimination over the integers.
//!
//! Rows are scaled to primitive integer vectors; eliminating a leading entry
//! uses `a·row − b·pivot` followed by division by the row content, so no
//! rational arithmetic is needed and intermediate entries stay small.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Q;
use super::matrix::RatMatrix;

type IntRow = Vec<(usize, BigInt)>;

fn primitive(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, x) in &row {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        for (_, x) in row.iter_mut() {
            *x = -&*x;
        }
    }
    row
}

pub(crate) fn integer_row(row: &[(usize, Q)]) -> IntRow {
    let mut l = BigInt::one();
    for (_, x) in row {
        l = l.lcm(x.denom());
    }
    primitive(
        row.iter()
            .map(|(c, x)| (*c, x.numer() * (&l / x.denom())))
            .collect(),
    )
}

/// `a·u − b·v` on sorted sparse integer rows.
fn combine(a: &BigInt, u: &IntRow, b: &BigInt, v: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let ci = u.get(i).map_or(usize::MAX, |e| e.0);
        let cj = v.get(j).map_or(usize::MAX, |e| e.0);
        let (c, x) = if ci < cj {
            i += 1;
            (ci, a * &u[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &v[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &u[i - 1].1 - b * &v[j - 1].1)
        };
        if !x.is_zero() {
            out.push((c, x));
        }
    }
    out
}

/// Primitive integer echelon rows of the row space of `m`.
pub fn integer_echelon(m: &RatMatrix) -> Vec<IntRow> {
    let mut rows: Vec<IntRow> = Vec::new();
    let mut by_lead: HashMap<usize, usize> = HashMap::new();
    let mut order: Vec<IntRow> = m
        .sparse_rows()
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| integer_row(r))
        .collect();
    // sparse rows first keeps fill-in low
    order.sort_by_key(|r| (r.len(), r[0].0));
    for mut row in order {
        while let Some((lead, x)) = row.first().cloned() {
            let Some(&p) = by_lead.get(&lead) else { break };
            let pivot = &rows[p];
            let g = x.gcd(&pivot[0].1);
            let a = &pivot[0].1 / &g;
            let b = &x / &g;
            row = primitive(combine(&a, &row, &b, pivot));
        }
        if !row.is_empty() {
            by_lead.insert(row[0].0, rows.len());
            rows.push(row);
        }
    }
    rows
}

pub fn fraction_free_rank(m: &RatMatrix) -> usize {
    integer_echelon(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{q, qf};
    use crate::linalg::matrix::Matrix;

    #[test]
    fn agrees_on_small_examples() {
        let m = Matrix::from_dense(vec![
            vec![q(1), q(2), q(3)],
            vec![qf(1, 2), q(1), qf(3, 2)],
            vec![q(0), q(1), q(-1)],
        ])
        .unwrap();
        assert_eq!(fraction_free_rank(&m), 2);
        assert_eq!(fraction_free_rank(&RatMatrix::identity(5)), 5);
        assert_eq!(fraction_free_rank(&RatMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn rows_are_primitive() {
        let m = Matrix::from_dense(vec![vec![q(4), q(6)], vec![q(-2), q(5)]]).unwrap();
        let e = integer_echelon(&m);
        assert_eq!(e[0], vec![(0, BigInt::from(2)), (1, BigInt::from(3))]);
        assert_eq!(e.len(), 2);
    }
}
