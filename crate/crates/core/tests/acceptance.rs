//! Acceptance criteria 1 to 10. Run with
//! `cargo test -p gradlie --test acceptance -- --nocapture` to see one
//! line per criterion.

use std::collections::BTreeMap;
use std::time::Instant;

use gradlie::algebra::{
    build_g2_split, build_so_split, build_sp21, build_sp6_split, so_v_index, validate, GradedLieAlgebra,
    NilpotentGradedAlgebra,
};
use gradlie::cohomology::{cohomology_dims, h1_negative_test, max_stabilizer_probe, CochainComplex, H2};
use gradlie::distribution::{classify_rank4, growth_vector_at, model_fields, symbol_at, Rank4Type};
use gradlie::linalg::{q, SparseVec, Subspace, Q};
use gradlie::prolongation::{compare_with_algebra, prolong_full};
use gradlie::subalgebra::{
    gap_scan, subspace_stabilizer_dim, verify_subalgebra, witness_bk, witness_catalog, GradedSubalgebra,
};
use gradlie::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;
const GAP_TRIALS: usize = 10_000;
const PROBE_TRIALS: usize = 32;

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, computed: T, expected: T) {
        let ok = computed == expected;
        self.expect(ok, format!("{what}: computed {computed:?}, expected {expected:?}"));
    }
}

fn so(n: usize) -> GradedLieAlgebra {
    build_so_split(n).expect("so family builds")
}

fn negative(g: &GradedLieAlgebra) -> Result<NilpotentGradedAlgebra> {
    NilpotentGradedAlgebra::negative_part_of(g)
}

fn criterion_1(t: &mut Tally) -> Result<()> {
    for n in 3..=5 {
        let g = so(n);
        t.eq(&format!("dim so-split-{n}"), g.dim(), 2 * n * n + n);
        t.expect(validate(&g).passed(), format!("so-split-{n} validates"));
    }
    let g2 = build_g2_split();
    t.eq("dim g2", g2.dim(), 14);
    t.eq("g2 grading", g2.component_dims(), vec![2, 1, 2, 4, 2, 1, 2]);
    t.expect(validate(&g2).passed(), "g2 validates");
    for (name, g) in [("sp6", build_sp6_split()), ("sp21", build_sp21())] {
        t.eq(&format!("dim {name}"), g.dim(), 21);
        t.eq(&format!("{name} grading"), g.component_dims(), vec![3, 4, 7, 4, 3]);
        t.expect(validate(&g).passed(), format!("{name} validates"));
    }
    Ok(())
}

fn criterion_2(t: &mut Tally) -> Result<()> {
    let algebras = [build_g2_split(), build_sp6_split(), build_sp21(), so(3), so(4), so(5)];
    for g in &algebras {
        t.expect(h1_negative_test(g)?, format!("H1 of {} in negative homogeneity", g.name()));
    }
    Ok(())
}

fn criterion_3(t: &mut Tally) -> Result<()> {
    let g2 = build_g2_split();
    let table = cohomology_dims(&g2, 2)?;
    t.eq("g2 dim H2", table.total, 5);
    t.eq("g2 H2 homogeneities", table.by_homogeneity.len(), 1);
    t.eq("g2 H2 via class representatives", H2::compute(&g2)?.dim(), 5);

    for g in [build_sp6_split(), build_sp21()] {
        let table = cohomology_dims(&g, 2)?;
        t.expect(
            table.by_homogeneity.len() >= 2,
            format!("{} H2 splits: {:?}", g.name(), table.by_homogeneity),
        );
        t.eq(&format!("{} H2 regression", g.name()), table.by_homogeneity, BTreeMap::from([(1, 12), (2, 5)]));
    }
    for (n, h, d) in [(3, 3, 27), (4, 1, 60)] {
        let table = cohomology_dims(&so(n), 2)?;
        t.eq(&format!("so-split-{n} H2 regression"), table.by_homogeneity, BTreeMap::from([(h, d)]));
    }
    Ok(())
}

fn parabolic_bound(n: usize) -> usize {
    n * n + 10 - 4 * n
}

fn criterion_4(t: &mut Tally) -> Result<()> {
    let cases = [
        (build_g2_split(), 2),
        (so(3), 5),
        (so(4), parabolic_bound(4)),
        (build_sp6_split(), 5),
        (build_sp21(), 5),
    ];
    for (g, best) in cases {
        let h2 = H2::compute(&g)?;
        let r = max_stabilizer_probe(&h2, SEED, PROBE_TRIALS)?;
        t.eq(&format!("{} probe best", g.name()), r.best_dim, best);
    }
    Ok(())
}

fn criterion_5(t: &mut Tally) -> Result<()> {
    for g in [build_g2_split(), build_sp6_split(), build_sp21(), so(3), so(4)] {
        let r = prolong_full(&g)?;
        t.expect(r.terminated, format!("{} prolongation terminates", g.name()));
        t.eq(&format!("{} prolongation total", g.name()), r.total(), g.dim());
        let dims: Vec<usize> = r.component_dims.values().copied().collect();
        t.eq(&format!("{} prolongation by degree", g.name()), dims, g.component_dims());
        t.expect(compare_with_algebra(&r, &g).passed, format!("{} comparison report", g.name()));
    }
    Ok(())
}

/// Closure checked directly on basis pairs, independent of the verifier.
fn closed_by_pairs(b: &GradedSubalgebra) -> Result<bool> {
    let g = b.algebra();
    let all: Vec<SparseVec<Q>> = b.components().values().flat_map(|s| s.basis().to_vec()).collect();
    let span = Subspace::span(g.dim(), &all);
    for (i, x) in all.iter().enumerate() {
        for y in &all[i + 1..] {
            if !span.contains_vec(&g.bracket(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_witness(t: &mut Tally, label: &str, b: &GradedSubalgebra, dim: usize) -> Result<()> {
    let r = verify_subalgebra(b);
    t.expect(r.closed && r.proper, format!("{label} verifies"));
    t.eq(&format!("{label} dim"), r.dim, dim);
    t.expect(closed_by_pairs(b)?, format!("{label} closed on basis pairs"));
    Ok(())
}

fn named<'a>(g: &'a GradedLieAlgebra, name: &str) -> Result<GradedSubalgebra<'a>> {
    witness_catalog(g)?
        .into_iter()
        .find(|w| w.name == name)
        .map(|w| w.subalgebra)
        .ok_or_else(|| gradlie::Error::Input(format!("no witness {name}")))
}

fn criterion_6(t: &mut Tally) -> Result<()> {
    for n in [3usize, 4] {
        let g = so(n);
        check_witness(t, &format!("b^{} in so-split-{n}", n - 1), &witness_bk(&g, n - 1)?, 2 * n * n - n + 1)?;
    }
    let g2 = build_g2_split();
    check_witness(t, "g2 negative plus zero", &named(&g2, "negative-plus-zero")?, 9)?;
    check_witness(t, "g2 parabolic", &named(&g2, "parabolic")?, 9)?;
    let ell = build_sp21();
    check_witness(t, "sp21 parabolic", &named(&ell, "parabolic")?, 14)?;
    let hyp = build_sp6_split();
    check_witness(t, "sp6 sixteen", &named(&hyp, "upper-triangular")?, 16)?;
    Ok(())
}

fn criterion_7(t: &mut Tally) -> Result<()> {
    let mut cases = vec![
        (build_g2_split(), (9, 14)),
        (build_sp21(), (14, 21)),
        (build_sp6_split(), (16, 21)),
    ];
    for n in [3usize, 4] {
        cases.push((so(n), (2 * n * n - n + 1, 2 * n * n + n)));
    }
    for (g, forbidden) in cases {
        let scan = gap_scan(&g, forbidden, GAP_TRIALS, SEED)?;
        let dims: Vec<usize> = scan.violations.iter().map(|v| v.dim).collect();
        t.expect(dims.is_empty(), format!("{} gap {forbidden:?} violated by dims {dims:?}", g.name()));
    }
    Ok(())
}

fn random_g1_subspace(n: usize, l: usize, g: &GradedLieAlgebra, rng: &mut ChaCha8Rng) -> Subspace {
    loop {
        let vs: Vec<SparseVec<Q>> = (0..l)
            .map(|_| {
                (0..n)
                    .filter_map(|a| {
                        let c: i64 = rng.gen_range(-3..=3);
                        (c != 0).then(|| (so_v_index(n, a), q(c)))
                    })
                    .collect()
            })
            .collect();
        let w = Subspace::span(g.dim(), &vs);
        if w.dim() == l {
            return w;
        }
    }
}

fn criterion_8(t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 3..=5usize {
        let g = so(n);
        let mut by_l = Vec::new();
        for l in 1..n {
            let expected = n * n - (n - l) * l;
            let coords: Vec<SparseVec<Q>> = (0..l).map(|a| vec![(so_v_index(n, a), q(1))]).collect();
            let w = Subspace::span(g.dim(), &coords);
            let d = subspace_stabilizer_dim(&g, 1, &w)?;
            t.eq(&format!("so-split-{n} coordinate l={l}"), d, expected);
            let w = random_g1_subspace(n, l, &g, &mut rng);
            t.eq(&format!("so-split-{n} random l={l}"), subspace_stabilizer_dim(&g, 1, &w)?, expected);
            by_l.push((l, d));
        }
        let max = by_l.iter().map(|p| p.1).max().unwrap_or(0);
        t.eq(&format!("so-split-{n} maximum"), max, n * n - n + 1);
        let argmax: Vec<usize> = by_l.iter().filter(|p| p.1 == max).map(|p| p.0).collect();
        let mut ends = vec![1, n - 1];
        ends.dedup();
        t.eq(&format!("so-split-{n} maximizers"), argmax, ends);
    }
    Ok(())
}

fn criterion_9(t: &mut Tally) -> Result<()> {
    let mut cases = vec![
        (build_g2_split(), vec![2, 3, 5]),
        (build_sp6_split(), vec![4, 7]),
        (build_sp21(), vec![4, 7]),
    ];
    for n in [3usize, 4] {
        cases.push((so(n), vec![n, n * (n + 1) / 2]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (g, growth) in cases {
        let nil = negative(&g)?;
        let fields = model_fields(&nil);
        let origin = vec![q(0); nil.dim()];
        t.eq(&format!("{} growth at origin", g.name()), growth_vector_at(&fields, &origin, nil.dim())?.dims, growth.clone());
        let p: Vec<Q> = (0..nil.dim()).map(|_| q(rng.gen_range(-5..=5))).collect();
        t.eq(&format!("{} growth off origin", g.name()), growth_vector_at(&fields, &p, nil.dim())?.dims, growth);
    }
    for (g, class) in [(build_sp21(), Rank4Type::Elliptic), (build_sp6_split(), Rank4Type::Hyperbolic)] {
        let nil = negative(&g)?;
        let sym = symbol_at(&model_fields(&nil), &vec![q(0); nil.dim()])?;
        t.eq(&format!("{} symbol class", g.name()), classify_rank4(&sym)?.class, class);
    }
    Ok(())
}

fn criterion_10(t: &mut Tally) -> Result<()> {
    for g in [build_g2_split(), so(3)] {
        let c = CochainComplex::new(&g)?;
        let top = c.negative().len();
        let mut chains: BTreeMap<i32, i64> = BTreeMap::new();
        let mut homology: BTreeMap<i32, i64> = BTreeMap::new();
        for qd in 0..=top {
            let sign = if qd % 2 == 0 { 1 } else { -1 };
            for h in c.homogeneities(qd) {
                let s = c.slice(qd, h);
                t.expect(s.d_out.mul(&s.d_in)?.is_zero(), format!("{} d^2 at q={qd} h={h}", g.name()));
                let dim = s.d_out.ncols() as i64;
                let hq = dim - s.d_out.rank() as i64 - s.d_in.rank() as i64;
                *chains.entry(h).or_default() += sign * dim;
                *homology.entry(h).or_default() += sign * hq;
            }
        }
        t.expect(top >= 5, format!("{} covers q up to 5", g.name()));
        t.eq(&format!("{} Euler characteristic by homogeneity", g.name()), homology, chains);
    }
    Ok(())
}

type Criterion = fn(&mut Tally) -> Result<()>;

#[test]
fn acceptance_criteria() {
    let criteria: [(u8, &str, Criterion); 10] = [
        (1, "algebra construction", criterion_1),
        (2, "cohomological hypothesis", criterion_2),
        (3, "second cohomology", criterion_3),
        (4, "stabilizer maxima", criterion_4),
        (5, "prolongation", criterion_5),
        (6, "witness subalgebras", criterion_6),
        (7, "gap property", criterion_7),
        (8, "stabilizer formula", criterion_8),
        (9, "distributions", criterion_9),
        (10, "complex invariants", criterion_10),
    ];
    let mut failed = Vec::new();
    for (n, title, run) in criteria {
        let start = Instant::now();
        let mut t = Tally::default();
        if let Err(e) = run(&mut t) {
            t.failures.push(format!("error: {e}"));
        }
        let secs = start.elapsed().as_secs_f64();
        if t.failures.is_empty() {
            println!("criterion {n}: PASS {title} ({} checks, {secs:.2}s)", t.checks);
        } else {
            println!("criterion {n}: FAIL {title} ({secs:.2}s): {}", t.failures.join("; "));
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
