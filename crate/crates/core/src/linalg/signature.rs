//! Inertia of a rational symmetric matrix by symmetric elimination.

use super::field::{Field, Q};
use super::matrix::RatMatrix;
use crate::error::{Error, Result};

/// `(positive, negative, zero)` counts of the congruence class.
pub fn signature(m: &RatMatrix) -> Result<(usize, usize, usize)> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::DimensionMismatch { left: n, right: m.ncols() });
    }
    let mut a = m.to_dense();
    for i in 0..n {
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(Error::Input("matrix is not symmetric".into()));
            }
        }
    }
    let (mut pos, mut neg) = (0, 0);
    let mut live: Vec<usize> = (0..n).collect();
    while !live.is_empty() {
        let p = match live.iter().position(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let hit = live.iter().enumerate().find_map(|(s, &i)| {
                    live.iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (s, i, j))
                });
                let Some((s, i, j)) = hit else { break };
                // congruence e_i ↦ e_i + e_j makes the diagonal entry 2a_ij
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] = a[r][i].add(&v);
                }
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] = a[i][c].add(&v);
                }
                s
            }
        };
        let i = live.swap_remove(p);
        let d = a[i][i].clone();
        if d > Q::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.inv();
        for &r in &live {
            let f = a[r][i].mul(&inv);
            if f.is_zero() {
                continue;
            }
            for &c in &live {
                let v = f.mul(&a[i][c]);
                a[r][c] = a[r][c].sub(&v);
            }
        }
        for &r in &live {
            a[r][i] = Q::zero();
            a[i][r] = Q::zero();
        }
    }
    Ok((pos, neg, n - pos - neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::q;
    use proptest::prelude::*;

    fn diag(entries: &[i64]) -> RatMatrix {
        let n = entries.len();
        RatMatrix::from_triplets(n, n, entries.iter().enumerate().map(|(i, v)| (i, i, q(*v))).collect())
    }

    #[test]
    fn hyperbolic_plane() {
        let h = RatMatrix::from_dense(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(signature(&h).unwrap(), (1, 1, 0));
    }

    #[test]
    fn rejects_asymmetric() {
        let m = RatMatrix::from_dense(vec![vec![q(0), q(1)], vec![q(2), q(0)]]).unwrap();
        assert!(signature(&m).is_err());
    }

    proptest! {
        // oracle: a diagonal matrix under a random unimodular congruence
        #[test]
        fn congruence_invariant(d in prop::collection::vec(-2i64..=2, 1..6),
                                ops in prop::collection::vec((0usize..6, 0usize..6, -3i64..=3), 0..12)) {
            let n = d.len();
            let mut p = RatMatrix::identity(n);
            for (i, j, c) in ops {
                let (i, j) = (i % n, j % n);
                if i != j {
                    let e = RatMatrix::from_triplets(n, n, (0..n).map(|t| (t, t, q(1))).chain([(i, j, q(c))]).collect());
                    p = p.mul(&e).unwrap();
                }
            }
            let m = p.transpose().mul(&diag(&d)).unwrap().mul(&p).unwrap();
            let expect = (
                d.iter().filter(|v| **v > 0).count(),
                d.iter().filter(|v| **v < 0).count(),
                d.iter().filter(|v| **v == 0).count(),
            );
            prop_assert_eq!(signature(&m).unwrap(), expect);
        }
    }
}
