//! Randomized search for proper graded subalgebras with dimension in a
//! forbidden interval.
//!
//! Trial `t` draws from `ChaCha8Rng` seeded with the master seed on stream
//! `t`: a generator count uniform in `1..=4`, then for each generator a
//! degree uniform among the nonzero components and integer coordinates
//! uniform in `[−3, 3]` (redrawn if all vanish).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{bracket_closure, SubalgebraJson};
use crate::algebra::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::linalg::{q, SparseVec, Q};

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub dim: usize,
    pub profile: Vec<usize>,
    pub subalgebra: SubalgebraJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapScan {
    /// Dimensions of proper closures.
    pub histogram: BTreeMap<usize, usize>,
    /// Trials whose closure is all of `g`.
    pub full: usize,
    pub violations: Vec<Violation>,
}

fn draw_generators(g: &GradedLieAlgebra, degrees: &[i32], rng: &mut ChaCha8Rng) -> Vec<SparseVec<Q>> {
    let count = rng.gen_range(1..=4);
    (0..count)
        .map(|_| {
            let d = degrees[rng.gen_range(0..degrees.len())];
            let idx = g.component(d);
            loop {
                let v: SparseVec<Q> = idx
                    .iter()
                    .filter_map(|&i| {
                        let c: i64 = rng.gen_range(-3..=3);
                        (c != 0).then(|| (i, q(c)))
                    })
                    .collect();
                if !v.is_empty() {
                    break v;
                }
            }
        })
        .collect()
}

/// `forbidden` is the open interval `(lo, hi)`.
pub fn gap_scan(g: &GradedLieAlgebra, forbidden: (usize, usize), trials: usize, seed: u64) -> Result<GapScan> {
    if trials == 0 {
        return input("at least one trial is required");
    }
    g.require_valid()?;
    let degrees: Vec<i32> = (-g.k()..=g.k()).filter(|&d| !g.component(d).is_empty()).collect();
    let outcomes: Vec<Result<(usize, Option<Violation>)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let gens = draw_generators(g, &degrees, &mut rng);
            let b = bracket_closure(g, &gens)?;
            let dim = b.dim();
            let bad = b.is_proper() && dim > forbidden.0 && dim < forbidden.1;
            let v = bad.then(|| Violation {
                trial: t,
                dim,
                profile: b.profile(),
                subalgebra: b.to_json(),
            });
            Ok((dim, v))
        })
        .collect();
    let mut scan = GapScan {
        histogram: BTreeMap::new(),
        full: 0,
        violations: Vec::new(),
    };
    for o in outcomes {
        let (dim, v) = o?;
        if dim == g.dim() {
            scan.full += 1;
        } else {
            *scan.histogram.entry(dim).or_default() += 1;
        }
        scan.violations.extend(v);
    }
    Ok(scan)
}
