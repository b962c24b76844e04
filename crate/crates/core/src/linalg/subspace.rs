use super::echelon::Echelon;
use super::field::{Field, Q};
use super::matrix::Matrix;
use super::sparse::{self, SparseVec};
use crate::error::{Error, Result};

/// Linear subspace of `F^ambient`, stored as its reduced row echelon basis.
///
/// The basis is canonical, so equality of spans is equality of values.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field = Q> {
    ambient: usize,
    basis: Vec<SparseVec<F>>,
}

/// Result of [`Subspace::ops`].
#[derive(Clone, Debug)]
pub struct SubspaceOps<F: Field> {
    pub sum: Subspace<F>,
    pub intersection: Subspace<F>,
    /// Whether the second operand lies inside the first.
    pub contains: bool,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vec![(i, F::one())]).collect(),
        }
    }

    /// Span of `vectors` (any spanning set; dependent vectors are dropped).
    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec<F>>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            debug_assert!(v.iter().all(|(i, _)| *i < ambient));
            e.insert(v);
        }
        Subspace::from_echelon(&e)
    }

    pub fn from_dense_rows(ambient: usize, rows: &[Vec<F>]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: bad.len(),
            });
        }
        let sv: Vec<SparseVec<F>> = rows.iter().map(|r| sparse::from_dense(r)).collect();
        Ok(Subspace::span(ambient, &sv))
    }

    pub fn from_echelon(e: &Echelon<F>) -> Self {
        Subspace {
            ambient: e.dim(),
            basis: e.rref(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r[0].0).collect()
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_sparse_rows(self.ambient, self.basis.clone())
    }

    fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.ambient);
        for v in &self.basis {
            e.insert(v);
        }
        e
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[(usize, F)]) -> Option<Vec<F>> {
        let coords: Vec<F> = self
            .basis
            .iter()
            .map(|row| sparse::get(v, row[0].0))
            .collect();
        let mut rest: SparseVec<F> = v.to_vec();
        for (row, c) in self.basis.iter().zip(&coords) {
            rest = sparse::axpy(&rest, &c.neg(), row);
        }
        rest.is_empty().then_some(coords)
    }

    pub fn contains_vec(&self, v: &[(usize, F)]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vec(v)))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v);
        }
        Ok(Subspace::from_echelon(&e))
    }

    /// Zassenhaus intersection: echelonize `[a | a]` over `[b | 0]`; rows
    /// whose left half vanishes carry the intersection in their right half.
    pub fn intersection(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut e = Echelon::new(2 * n);
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(sparse::shift(v, n));
            e.insert(&row);
        }
        for v in &other.basis {
            e.insert(v);
        }
        let right: Vec<SparseVec<F>> = e
            .rows()
            .iter()
            .filter(|r| r[0].0 >= n)
            .map(|r| r.iter().map(|(i, x)| (i - n, x.clone())).collect())
            .collect();
        Ok(Subspace::span(n, &right))
    }

    pub fn ops(&self, other: &Subspace<F>) -> Result<SubspaceOps<F>> {
        Ok(SubspaceOps {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
            contains: self.contains(other)?,
        })
    }

    /// Linear functionals (as coordinate vectors) vanishing on the subspace.
    pub fn annihilator(&self) -> Subspace<F> {
        self.basis_matrix().kernel()
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        let rows: Vec<SparseVec<G>> = self.basis.iter().map(|r| sparse::map(r, &f)).collect();
        Subspace::span(self.ambient, &rows)
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::q;

    fn e(n: usize, i: usize) -> SparseVec<Q> {
        let _ = n;
        vec![(i, q(1))]
    }

    #[test]
    fn coordinate_axes() {
        let a = Subspace::span(3, &[e(3, 0)]);
        let b = Subspace::span(3, &[e(3, 1)]);
        let ops = a.ops(&b).unwrap();
        assert_eq!(ops.sum.dim(), 2);
        assert_eq!(ops.intersection.dim(), 0);
        assert!(!ops.contains);
    }

    #[test]
    fn identical_operands() {
        let a = Subspace::span(3, &[vec![(0, q(1)), (2, q(2))]]);
        let ops = a.ops(&a).unwrap();
        assert_eq!(ops.sum, a);
        assert_eq!(ops.intersection, a);
        assert!(ops.contains);
    }

    #[test]
    fn skew_pair_in_four_space() {
        let a = Subspace::span(4, &[vec![(0, q(1)), (1, q(1))], e(4, 2)]);
        let b = Subspace::span(4, &[e(4, 1), e(4, 2)]);
        let ops = a.ops(&b).unwrap();
        assert_eq!(ops.intersection, Subspace::span(4, &[e(4, 2)]));
        assert_eq!(ops.sum.dim(), 3);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Q>::full(3);
        let b = Subspace::<Q>::full(4);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn canonical_form_identifies_equal_spans() {
        let a = Subspace::span(3, &[vec![(0, q(1)), (1, q(1))], vec![(1, q(1)), (2, q(1))]]);
        let b = Subspace::span(3, &[vec![(0, q(1)), (2, q(-1))], vec![(0, q(2)), (1, q(2))]]);
        assert_eq!(a, b);
    }
}
