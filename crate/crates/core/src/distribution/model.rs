//! Left-invariant fields of a nilpotent group in exponential coordinates.
//!
//! With `x = Σ x_i e_i`, the left-invariant field of `X` at `exp(x)` is
//! `ψ(ad_x) X` for `ψ(z) = z / (1 − e^{−z}) = Σ (−1)^m B_m z^m / m!`.
//! The series stops below the nilpotency step, so components are
//! polynomials of degree `< k`.

use super::poly::{Poly, PolyVectorField};
use crate::algebra::{GradedLieAlgebra, NilpotentGradedAlgebra};
use crate::linalg::{q, qf, Field, Q};

/// Bernoulli numbers `B_0 … B_m` with `B_1 = −1/2`.
pub fn bernoulli(m: usize) -> Vec<Q> {
    let mut b: Vec<Q> = vec![q(1)];
    for n in 1..=m {
        // Σ_{j<n+1} C(n+1, j) B_j = 0
        let mut binom = Q::one();
        let mut acc = Q::zero();
        for (j, bj) in b.iter().enumerate() {
            acc = acc.add(&binom.mul(bj));
            binom = binom.mul(&qf((n + 1 - j) as i64, (j + 1) as i64));
        }
        b.push(acc.neg().div(&q(n as i64 + 1)));
    }
    b
}

/// Taylor coefficients of `z / (1 − e^{−z})` up to degree `m`.
pub fn psi_coefficients(m: usize) -> Vec<Q> {
    let mut fact = Q::one();
    bernoulli(m)
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            if i > 0 {
                fact = fact.mul(&q(i as i64));
            }
            let c = b.div(&fact);
            if i % 2 == 1 {
                c.neg()
            } else {
                c
            }
        })
        .collect()
}

/// `ad_x v = Σ_i x_i [e_i, v]` on vectors of polynomials.
fn ad_x(g: &GradedLieAlgebra, v: &[Poly]) -> Vec<Poly> {
    let n = g.dim();
    let mut out = vec![Poly::zero(n); n];
    for i in 0..n {
        let xi = Poly::var(n, i);
        for (s, vs) in v.iter().enumerate() {
            if vs.is_zero() {
                continue;
            }
            let prod = xi.mul(vs);
            for (t, c) in g.bracket_basis(i, s) {
                out[*t] = out[*t].add(&prod.scale(c));
            }
        }
    }
    out
}

/// Left-invariant fields of the basis elements `e_j` of degree −1, in the
/// order of the basis.
pub fn model_fields(n: &NilpotentGradedAlgebra) -> Vec<PolyVectorField> {
    let dim = n.dim();
    let coeffs = psi_coefficients(n.k() as usize);
    n.component(-1)
        .into_iter()
        .map(|j| {
            let mut term: Vec<Poly> = (0..dim)
                .map(|t| if t == j { Poly::constant(dim, q(1)) } else { Poly::zero(dim) })
                .collect();
            let mut acc = term.clone();
            for c in &coeffs[1..] {
                term = ad_x(n, &term);
                if term.iter().all(Poly::is_zero) {
                    break;
                }
                for (a, t) in acc.iter_mut().zip(&term) {
                    *a = a.add(&t.scale(c));
                }
            }
            PolyVectorField { components: acc }
        })
        .collect()
}
