use super::GradedLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{q, Echelon, RatMatrix, SparseVec, Q};

/// Assembles a graded Lie algebra from a basis of matrices closed under the
/// commutator. Structure constants are solved for exactly.
pub struct MatrixLieBuilder {
    size: usize,
    elements: Vec<(RatMatrix, i32)>,
    cartan: Vec<SparseVec<Q>>,
}

fn flatten(m: &RatMatrix) -> SparseVec<Q> {
    let n = m.ncols();
    let mut out = Vec::with_capacity(m.nnz());
    for (r, row) in m.sparse_rows().iter().enumerate() {
        out.extend(row.iter().map(|(c, x)| (r * n + c, x.clone())));
    }
    out
}

impl MatrixLieBuilder {
    pub fn new(size: usize) -> Self {
        MatrixLieBuilder {
            size,
            elements: Vec::new(),
            cartan: Vec::new(),
        }
    }

    /// Appends a basis element; basis order is the order of pushes, which
    /// must be by nondecreasing degree.
    pub fn push(&mut self, m: RatMatrix, degree: i32) -> usize {
        assert_eq!((m.nrows(), m.ncols()), (self.size, self.size));
        if let Some((_, d)) = self.elements.last() {
            assert!(*d <= degree, "basis must be pushed in degree order");
        }
        self.elements.push((m, degree));
        self.elements.len() - 1
    }

    /// Marks a combination of already pushed elements as part of the torus.
    pub fn cartan(&mut self, element: SparseVec<Q>) {
        self.cartan.push(element);
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn build(self, name: &str, k: i32) -> Result<GradedLieAlgebra> {
        let n = self.elements.len();
        let flat: Vec<SparseVec<Q>> = self.elements.iter().map(|(m, _)| flatten(m)).collect();
        let mut e = Echelon::with_tracking(self.size * self.size);
        for (i, v) in flat.iter().enumerate() {
            if !e.insert(v) {
                return Err(Error::InvalidAlgebra(format!(
                    "{name}: basis matrix {i} is linearly dependent on earlier ones"
                )));
            }
        }
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.elements[i].0, &self.elements[j].0);
                let c = a.mul(b)?.sub(&b.mul(a)?)?;
                let v = flatten(&c);
                let coords = e.express(&v).ok_or_else(|| {
                    Error::InvalidAlgebra(format!("{name}: commutator of {i} and {j} leaves the span"))
                })?;
                if !coords.is_empty() {
                    brackets.push((i, j, coords));
                }
            }
        }
        let degrees = self.elements.iter().map(|(_, d)| *d).collect();
        Ok(GradedLieAlgebra::from_brackets(name, k, degrees, brackets)?.with_cartan(self.cartan))
    }
}

/// Matrix with the given `(row, col, value)` entries.
pub(crate) fn mat(size: usize, entries: &[(usize, usize, i64)]) -> RatMatrix {
    RatMatrix::from_triplets(
        size,
        size,
        entries.iter().map(|&(r, c, x)| (r, c, q(x))).collect(),
    )
}

pub(crate) fn unit(i: usize) -> SparseVec<Q> {
    vec![(i, q(1))]
}
