//! Characteristic polynomials and rational eigen-data.

use super::field::Field;
use super::matrix::Matrix;

/// Coefficients of `det(t·I − m)`, lowest degree first (monic).
///
/// Reduction to upper Hessenberg form by similarity, then the standard
/// recurrence on leading principal minors.
pub fn charpoly<F: Field>(m: &Matrix<F>) -> Vec<F> {
    assert_eq!(m.nrows(), m.ncols(), "charpoly of a non-square matrix");
    let n = m.nrows();
    let mut a = m.to_dense();
    for k in 0..n.saturating_sub(2) {
        let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
            continue;
        };
        if p != k + 1 {
            a.swap(p, k + 1);
            for row in a.iter_mut() {
                row.swap(p, k + 1);
            }
        }
        let inv = a[k + 1][k].inv();
        for i in k + 2..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].mul(&inv);
            for j in 0..n {
                let t = a[k + 1][j].clone();
                a[i][j].sub_mul_assign(&f, &t);
            }
            for row in a.iter_mut() {
                let t = row[i].mul(&f);
                row[k + 1] = row[k + 1].add(&t);
            }
        }
    }
    // p[j] = charpoly of the leading j×j block
    let mut polys: Vec<Vec<F>> = vec![vec![F::one()]];
    for j in 0..n {
        let mut next = vec![F::zero(); j + 2];
        for (d, c) in polys[j].iter().enumerate() {
            next[d + 1] = next[d + 1].add(c);
            next[d] = next[d].sub(&a[j][j].mul(c));
        }
        let mut prod = F::one();
        for i in (0..j).rev() {
            prod = prod.mul(&a[i + 1][i]);
            if prod.is_zero() {
                break;
            }
            let coef = prod.mul(&a[i][j]);
            for (d, c) in polys[i].iter().enumerate() {
                next[d] = next[d].sub(&coef.mul(c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn eval_poly<F: Field>(p: &[F], x: &F) -> F {
    p.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{q, Q};

    #[test]
    fn two_by_two() {
        let m = Matrix::from_dense(vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        assert_eq!(charpoly(&m), vec![q(-2), q(-5), q(1)]);
    }

    #[test]
    fn companion_roots() {
        // eigenvalues 1, 2, 3 after a similarity
        let m = Matrix::from_dense(vec![
            vec![q(2), q(1), q(0)],
            vec![q(0), q(1), q(4)],
            vec![q(0), q(0), q(3)],
        ])
        .unwrap();
        let p: Vec<Q> = charpoly(&m);
        for r in [1, 2, 3] {
            assert_eq!(eval_poly(&p, &q(r)), q(0));
        }
        let s = Matrix::from_dense(vec![
            vec![q(1), q(1), q(0)],
            vec![q(0), q(1), q(1)],
            vec![q(1), q(0), q(1)],
        ])
        .unwrap();
        let conj = s.mul(&m).unwrap().mul(&inverse3(&s)).unwrap();
        assert_eq!(charpoly(&conj), p);
    }

    fn inverse3(s: &Matrix<Q>) -> Matrix<Q> {
        let n = s.nrows();
        let mut e = crate::linalg::Echelon::with_tracking(n);
        for r in s.sparse_rows() {
            e.insert(r);
        }
        let rows = (0..n)
            .map(|i| e.express(&[(i, q(1))]).unwrap())
            .collect();
        Matrix::from_sparse_rows(n, rows)
    }

    /// Faddeev–LeVerrier recurrence, an independent route to the same
    /// coefficients.
    fn leverrier(a: &Matrix<Q>) -> Vec<Q> {
        let n = a.nrows();
        let mut c = vec![q(0); n + 1];
        c[n] = q(1);
        let mut m = Matrix::<Q>::zeros(n, n);
        for k in 1..=n {
            let shifted = Matrix::identity(n).scale(&c[n + 1 - k]);
            m = a.mul(&m).unwrap().sub(&shifted.scale(&q(-1))).unwrap();
            let am = a.mul(&m).unwrap();
            let tr = (0..n).fold(q(0), |acc, i| acc + am.get(i, i));
            c[n - k] = -tr / q(k as i64);
        }
        c
    }

    proptest::proptest! {
        #[test]
        fn matches_leverrier(entries in proptest::collection::vec(-4i64..5, 25), n in 1usize..6) {
            let rows = (0..n).map(|i| (0..n).map(|j| q(entries[i * 5 + j])).collect()).collect();
            let a = Matrix::from_dense(rows).unwrap();
            proptest::prop_assert_eq!(charpoly(&a), leverrier(&a));
        }
    }
}
