//! Search for classes in `H²` with large stabilizers in `g₀`.
//!
//! Candidates are weight vectors of the torus recorded on the algebra,
//! highest weight vectors for a generic ordering of the roots of `g₀`, and
//! seeded random rational classes. Torus elements of a non-split real form
//! may only diagonalize over `ℚ(i)`, so stabilizers of weight vectors are
//! complex dimensions; for rational vectors these agree with real ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::h2::{CohomologyClass, H2Slice, H2};
use crate::error::{input, Result};
use crate::linalg::charpoly::{charpoly, eval_poly};
use crate::linalg::{q, sparse, Field, GaussQ, Matrix, RatMatrix, SparseVec, Subspace, Q};
use crate::rational::format_q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    WeightVector,
    HighestWeight,
    Random,
}

/// A class with coordinates in `ℚ(i)` relative to the slice basis.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeWitness {
    pub homogeneity: i32,
    pub source: WitnessSource,
    /// Coordinates as strings `"a/b"` or `"a/b+c/di"`.
    pub coordinates: Vec<String>,
    /// Present when all coordinates are rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<CohomologyClass>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeResult {
    /// Largest stabilizer dimension found (complex dimension for
    /// non-rational witnesses).
    pub best_dim: usize,
    pub witness: ProbeWitness,
    /// Largest stabilizer dimension among rational classes.
    pub best_rational_dim: usize,
    pub candidates_examined: usize,
}

fn gauss_string(z: &GaussQ) -> String {
    if z.is_real() {
        format_q(&z.re)
    } else {
        let sign = if z.im < q(0) { "" } else { "+" };
        format!("{}{}{}i", format_q(&z.re), sign, format_q(&z.im))
    }
}

fn lift(m: &RatMatrix) -> Matrix<GaussQ> {
    m.map(GaussQ::from_rational)
}

/// Distinct eigenvalues of `m` in `ℤ[i]`, searched by increasing norm until
/// their eigenspaces fill the space or the search bound is exhausted.
pub(crate) fn gaussian_eigenspaces(m: &RatMatrix) -> Vec<(GaussQ, Subspace<GaussQ>)> {
    let n = m.nrows();
    if n == 0 {
        return Vec::new();
    }
    let p: Vec<GaussQ> = charpoly(m).iter().map(GaussQ::from_rational).collect();
    let bound = m
        .sparse_rows()
        .iter()
        .map(|r| r.iter().map(|(_, x)| crate::linalg::field::ceil_abs(x)).sum::<num_bigint::BigInt>())
        .max()
        .unwrap_or_default();
    let bound: i64 = num_traits::ToPrimitive::to_i64(&bound).unwrap_or(i64::MAX).min(64);
    let mg = lift(m);
    let mut found = Vec::new();
    let mut covered = 0;
    for radius in 0..=2 * bound {
        for a in -radius..=radius {
            let b_abs = radius - a.abs();
            if a.abs() > bound || b_abs > bound {
                continue;
            }
            let bs = if b_abs == 0 { vec![0] } else { vec![b_abs, -b_abs] };
            for b in bs {
                let z = GaussQ::new(q(a), q(b));
                if !Field::is_zero(&eval_poly(&p, &z)) {
                    continue;
                }
                let shifted = mg.sub(&Matrix::identity(n).scale(&z)).expect("square");
                let space = shifted.kernel();
                covered += space.dim();
                found.push((z, space));
            }
        }
        if covered == n {
            break;
        }
    }
    found
}

/// Simultaneous eigenspaces of commuting matrices.
pub(crate) fn weight_spaces(actions: &[RatMatrix], dim: usize) -> Vec<(Vec<GaussQ>, Subspace<GaussQ>)> {
    let mut spaces = vec![(Vec::new(), Subspace::<GaussQ>::full(dim))];
    for m in actions {
        let eig = gaussian_eigenspaces(m);
        let mut next = Vec::new();
        for (w, s) in &spaces {
            for (z, e) in &eig {
                let meet = s.intersection(e).expect("same ambient");
                if !meet.is_zero() {
                    let mut w2 = w.clone();
                    w2.push(z.clone());
                    next.push((w2, meet));
                }
            }
        }
        spaces = next;
    }
    spaces
}

/// A real linear functional on weights that separates the roots.
fn height(w: &[GaussQ]) -> Q {
    let base = q(1009);
    let mut scale = q(1);
    let mut acc = q(0);
    for z in w {
        acc += &z.re * &scale;
        scale = &scale * &base;
        acc += &z.im * &scale;
        scale = &scale * &base;
    }
    acc
}

/// Complex stabilizer dimension of a coordinate vector.
fn stabilizer_dim<F: Field>(action: &[Matrix<F>], v: &[(usize, F)]) -> usize {
    let dim = action.first().map_or(0, |m| m.nrows());
    let rows: Vec<SparseVec<F>> = action.iter().map(|m| m.mul_vec(v)).collect();
    action.len() - Matrix::from_sparse_rows(dim, rows).rank()
}

struct Best {
    dim: Option<usize>,
    witness: Option<ProbeWitness>,
    rational: usize,
    examined: usize,
}

impl Best {
    fn offer(&mut self, slice: &H2Slice, coords: &[(usize, GaussQ)], dim: usize, source: WitnessSource) {
        self.examined += 1;
        let rational = coords.iter().all(|(_, z)| z.is_real());
        if rational {
            self.rational = self.rational.max(dim);
        }
        if self.dim.is_some_and(|d| d >= dim) {
            return;
        }
        let dense = sparse::to_dense(coords, slice.dim());
        let class = rational.then(|| {
            let re: Vec<Q> = dense.iter().map(|z| z.re.clone()).collect();
            slice.class_from_coordinates(&re)
        });
        self.dim = Some(dim);
        self.witness = Some(ProbeWitness {
            homogeneity: slice.homogeneity,
            source,
            coordinates: dense.iter().map(gauss_string).collect(),
            class,
        });
    }
}

/// Weight and highest weight vectors of every slice of `H²`, then `trials`
/// random rational classes distributed over the slices in turn.
pub fn max_stabilizer_probe(h2: &H2, seed: u64, trials: usize) -> Result<ProbeResult> {
    if h2.dim() == 0 {
        return input("H^2 vanishes; nothing to probe");
    }
    let g = h2.algebra();
    let g0 = h2.g0();
    let torus: Vec<SparseVec<Q>> = g.cartan().to_vec();
    // roots of g₀ with respect to the torus
    let pos0: std::collections::HashMap<usize, usize> = g0.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let ad0: Vec<RatMatrix> = torus
        .iter()
        .map(|h| {
            let mut t = Vec::new();
            for (col, &j) in g0.iter().enumerate() {
                for (r, c) in g.bracket(h, &[(j, q(1))]) {
                    t.push((pos0[&r], col, c));
                }
            }
            RatMatrix::from_triplets(g0.len(), g0.len(), t)
        })
        .collect();
    let positive_roots: Vec<SparseVec<GaussQ>> = weight_spaces(&ad0, g0.len())
        .into_iter()
        .filter(|(w, _)| height(w) > q(0))
        .flat_map(|(_, s)| s.basis().to_vec())
        .collect();

    let mut best = Best {
        dim: None,
        witness: None,
        rational: 0,
        examined: 0,
    };
    for slice in &h2.slices {
        let action: Vec<Matrix<GaussQ>> = slice.action_matrices().iter().map(lift).collect();
        let torus_action: Vec<RatMatrix> = torus
            .iter()
            .map(|h| h2.action_of(slice, h))
            .collect::<Result<_>>()?;
        let weights = weight_spaces(&torus_action, slice.dim());
        // vectors killed by every positive root vector
        let mut primitive = Subspace::<GaussQ>::full(slice.dim());
        for e in &positive_roots {
            let mut m = Matrix::<GaussQ>::zeros(slice.dim(), slice.dim());
            for (k, c) in e {
                m = m.sub(&action[*k].scale(&c.neg())).expect("same shape");
            }
            primitive = primitive.intersection(&m.kernel()).expect("same ambient");
        }
        for (_, space) in &weights {
            for v in space.basis() {
                let d = stabilizer_dim(&action, v);
                best.offer(slice, v, d, WitnessSource::WeightVector);
            }
            let top = space.intersection(&primitive).expect("same ambient");
            for v in top.basis() {
                let d = stabilizer_dim(&action, v);
                best.offer(slice, v, d, WitnessSource::HighestWeight);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rational_action: Vec<Vec<&RatMatrix>> = h2
        .slices
        .iter()
        .map(|s| s.action_matrices().iter().collect())
        .collect();
    for t in 0..trials {
        let si = t % h2.slices.len();
        let slice = &h2.slices[si];
        let mut coords: Vec<(usize, Q)> = Vec::new();
        while coords.is_empty() {
            coords = (0..slice.dim())
                .map(|i| (i, q(rng.gen_range(-3..=3))))
                .filter(|(_, x)| !Field::is_zero(x))
                .collect();
        }
        let mats: Vec<RatMatrix> = rational_action[si].iter().map(|m| (*m).clone()).collect();
        let d = stabilizer_dim(&mats, &coords);
        let lifted: Vec<(usize, GaussQ)> = coords.iter().map(|(i, x)| (*i, GaussQ::from_rational(x))).collect();
        best.offer(slice, &lifted, d, WitnessSource::Random);
    }
    Ok(ProbeResult {
        best_dim: best.dim.expect("at least one candidate"),
        witness: best.witness.expect("at least one candidate"),
        best_rational_dim: best.rational,
        candidates_examined: best.examined,
    })
}
