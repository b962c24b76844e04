use std::collections::BTreeMap;

use super::echelon::Echelon;
use super::field::{Field, Q};
use super::sparse::{self, SparseVec};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Matrix over `F` stored as sparse rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<F>>,
}

/// Exact rational matrix.
pub type RatMatrix = Matrix<Q>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, F::one())]).collect(),
        }
    }

    pub fn from_dense(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| sparse::from_dense(r)).collect(),
        })
    }

    /// Rows must be sorted, zero-free and have indices below `cols`.
    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec<F>>) -> Self {
        debug_assert!(data
            .iter()
            .all(|r| r.iter().all(|(c, x)| *c < cols && !x.is_zero())));
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Assembles a matrix from `(row, col, value)` triplets; repeated
    /// positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, entries: Vec<(usize, usize, F)>) -> Self {
        let mut per_row: Vec<Vec<(usize, F)>> = vec![Vec::new(); rows];
        for (r, c, x) in entries {
            per_row[r].push((c, x));
        }
        Matrix {
            rows,
            cols,
            data: per_row.into_iter().map(sparse::collect).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, F)] {
        &self.data[i]
    }

    pub fn sparse_rows(&self) -> &[SparseVec<F>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        sparse::get(&self.data[i], j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(p) if value.is_zero() => {
                row.remove(p);
            }
            Ok(p) => row[p].1 = value,
            Err(_) if value.is_zero() => {}
            Err(p) => row.insert(p, (j, value)),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        self.data
            .iter()
            .map(|r| sparse::to_dense(r, self.cols))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec<F>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                cols[*j].push((i, x.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data: cols,
        }
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        let e = acc.entry(*j).or_insert_with(F::zero);
                        *e = e.add(&a.mul(b));
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[(usize, F)]) -> SparseVec<F> {
        self.data
            .iter()
            .enumerate()
            .map(|(i, r)| (i, sparse::dot(r, v)))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| sparse::map(r, &f)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| sparse::scale(r, c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.sub(&other.scale(&F::one().neg()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| sparse::axpy(a, &F::one().neg(), b))
                .collect(),
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: perm.iter().map(|&p| self.data[p].clone()).collect(),
        }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        let mut inverse = vec![0; perm.len()];
        for (j, &p) in perm.iter().enumerate() {
            inverse[p] = j;
        }
        let data = self
            .data
            .iter()
            .map(|r| sparse::collect(r.iter().map(|(c, x)| (inverse[*c], x.clone()))))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.cols);
        for row in &self.data {
            e.insert(row);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_echelon(&self.echelon())
    }

    /// Right null space `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let rref = self.echelon().rref();
        let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        // column f of the RREF, as a list of (pivot column, entry)
        let mut by_col: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.cols];
        for (row, &p) in rref.iter().zip(&pivots) {
            for (c, x) in row.iter().skip(1) {
                by_col[*c].push((p, x.clone()));
            }
        }
        let basis: Vec<SparseVec<F>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v: Vec<(usize, F)> = by_col[f].iter().map(|(p, x)| (*p, x.neg())).collect();
                v.push((f, F::one()));
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect();
        Subspace::span(self.cols, &basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::q;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_dense(rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(4, 7).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4], &[0, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::identity(3).kernel().dim(), 0);
        assert_eq!(RatMatrix::zeros(2, 5).kernel().dim(), 5);
        let k = m(&[&[1, 1, 0]]).kernel();
        assert_eq!(k.dim(), 2);
        assert!(k.contains_vec(&[(0, q(1)), (1, q(-1))]));
        assert!(k.contains_vec(&[(2, q(1))]));
    }

    #[test]
    fn kernel_annihilated_by_matrix() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let k = a.kernel();
        assert_eq!(k.dim() + a.rank(), 4);
        for v in k.basis() {
            assert!(a.mul_vec(v).is_empty());
        }
    }

    #[test]
    fn multiply_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
    }
}
