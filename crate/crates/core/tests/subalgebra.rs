use std::collections::BTreeMap;

use gradlie::algebra::{build_g2_split, build_so_split, build_sp21, build_sp6_split, so_v_index, GradedLieAlgebra};
use gradlie::linalg::{q, SparseVec, Subspace, Q};
use gradlie::subalgebra::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalog_dims(g: &GradedLieAlgebra) -> BTreeMap<String, (bool, usize, Vec<usize>)> {
    witness_catalog(g)
        .unwrap()
        .into_iter()
        .map(|w| {
            let r = verify_subalgebra(&w.subalgebra);
            (w.name, (r.closed && r.proper, r.dim, r.profile))
        })
        .collect()
}

#[test]
fn catalog_witnesses() {
    let g2 = catalog_dims(&build_g2_split());
    assert_eq!(g2["parabolic"].1, 9);
    assert_eq!(g2["negative-plus-zero"].1, 9);
    assert_eq!(g2["line-stabilizer"].1, 9);
    assert!(g2.values().all(|v| v.0));

    let ell = catalog_dims(&build_sp21());
    assert_eq!(ell["parabolic"], (true, 14, vec![0, 0, 7, 4, 3]));

    let hyp = catalog_dims(&build_sp6_split());
    assert_eq!(hyp["upper-triangular"], (true, 16, vec![3, 4, 6, 2, 1]));

    for n in [3usize, 4] {
        let so = catalog_dims(&build_so_split(n).unwrap());
        let b = &so[&format!("b^{}", n - 1)];
        assert!(b.0);
        assert_eq!(b.1, 2 * n * n - n + 1);
    }
}

#[test]
fn bk_dimension_formula() {
    for n in 3..=5usize {
        let g = build_so_split(n).unwrap();
        for k in 1..n {
            let b = witness_bk(&g, k).unwrap();
            let r = verify_subalgebra(&b);
            assert!(r.closed, "n={n} k={k}");
            assert_eq!(r.dim, n * (n - 1) / 2 + n + (n * n - (n - k) * k) + k + k * (k - 1) / 2);
        }
        assert!(witness_bk(&g, 0).is_err());
        assert!(witness_bk(&g, n).is_err());
    }
    assert_eq!(witness_bk(&build_so_split(3).unwrap(), 1).unwrap().dim(), 14);
    assert!(witness_bk(&build_g2_split(), 1).is_err());
}

#[test]
fn whole_and_degree_minus_one() {
    let g = build_g2_split();
    let whole = GradedSubalgebra::whole(&g);
    let r = verify_subalgebra(&whole);
    assert!(r.closed && !r.proper);
    assert_eq!(r.dim, 14);
    let b = GradedSubalgebra::from_basis_indices(&g, g.component(-1)).unwrap();
    let r = verify_subalgebra(&b);
    assert!(!r.closed);
    assert_eq!(r.failure, Some((-1, -1)));
}

#[test]
fn component_outside_its_piece_is_rejected() {
    let g = build_g2_split();
    let e = g.component(1)[0];
    let comps = BTreeMap::from([(0, Subspace::span(g.dim(), &[vec![(e, q(1))]]))]);
    assert!(GradedSubalgebra::new(&g, comps).is_err());
}

#[test]
fn closures() {
    let g = build_g2_split();
    let gens: Vec<SparseVec<Q>> = g.component(-1).into_iter().map(|i| vec![(i, q(1))]).collect();
    let b = bracket_closure(&g, &gens).unwrap();
    assert_eq!(b.profile(), vec![2, 1, 2, 0, 0, 0, 0]);
    assert_eq!(bracket_closure(&g, &[]).unwrap().dim(), 0);
    let mixed = vec![(g.component(-1)[0], q(1)), (g.component(1)[0], q(1))];
    assert!(bracket_closure(&g, &[mixed]).is_err());
}

fn random_homogeneous(g: &GradedLieAlgebra, d: i32, rng: &mut ChaCha8Rng) -> SparseVec<Q> {
    g.component(d)
        .into_iter()
        .filter_map(|i| {
            let c: i64 = rng.gen_range(-3..=3);
            (c != 0).then(|| (i, q(c)))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn closure_is_a_subalgebra(seed in any::<u64>(), which in 0usize..3) {
        let g = match which {
            0 => build_g2_split(),
            1 => build_sp6_split(),
            _ => build_so_split(3).unwrap(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<SparseVec<Q>> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(-g.k()..=g.k());
                random_homogeneous(&g, d, &mut rng)
            })
            .collect();
        let b = bracket_closure(&g, &gens).unwrap();
        prop_assert!(verify_subalgebra(&b).closed);
        for x in gens.iter().filter(|x| !x.is_empty()) {
            let d = g.homogeneous_degree(x).unwrap();
            prop_assert!(b.component(d).contains_vec(x));
        }
    }

    #[test]
    fn so_stabilizer_is_conjugation_invariant(seed in any::<u64>(), l in 1usize..3) {
        // a random l-dimensional subspace of g₁ is GL(n)-conjugate to the
        // coordinate one
        let n = 3;
        let g = build_so_split(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vs: Vec<SparseVec<Q>> = (0..l).map(|_| random_homogeneous(&g, 1, &mut rng)).collect();
        let w = Subspace::span(g.dim(), &vs);
        prop_assume!(w.dim() == l);
        prop_assert_eq!(subspace_stabilizer_dim(&g, 1, &w).unwrap(), n * n - (n - l) * l);
    }
}

#[test]
fn so_stabilizer_formula() {
    for n in 3..=5usize {
        let g = build_so_split(n).unwrap();
        let dims: Vec<usize> = (1..n)
            .map(|l| {
                let vs: Vec<SparseVec<Q>> = (0..l).map(|a| vec![(so_v_index(n, a), q(1))]).collect();
                subspace_stabilizer_dim(&g, 1, &Subspace::span(g.dim(), &vs)).unwrap()
            })
            .collect();
        for (l, d) in (1..n).zip(&dims) {
            assert_eq!(*d, n * n - (n - l) * l);
        }
        let max = *dims.iter().max().unwrap();
        assert_eq!(max, n * n - n + 1);
        assert_eq!(dims[0], max);
        assert_eq!(dims[n - 2], max);
    }
}

#[test]
fn g2_line_and_full_component() {
    let g = build_g2_split();
    let line = Subspace::span(g.dim(), &[vec![(g.component(1)[0], q(1))]]);
    assert_eq!(subspace_stabilizer_dim(&g, 1, &line).unwrap(), 3);
    assert_eq!(subspace_stabilizer_dim(&g, 1, &g.component_subspace(1)).unwrap(), 4);
    assert!(subspace_stabilizer_dim(&g, -1, &line).is_err());
}

#[test]
fn scan_is_deterministic_and_clean() {
    let g = build_g2_split();
    let a = gap_scan(&g, (9, 14), 300, 5).unwrap();
    let b = gap_scan(&g, (9, 14), 300, 5).unwrap();
    assert_eq!(a.histogram, b.histogram);
    assert!(a.violations.is_empty());
    assert_eq!(a.histogram.values().sum::<usize>() + a.full, 300);
    assert!(a.histogram.keys().all(|&d| d <= 9));
}

#[test]
fn scan_reports_forced_violation() {
    let g = build_g2_split();
    let s = gap_scan(&g, (0, 14), 50, 5).unwrap();
    assert!(!s.violations.is_empty());
    let v = &s.violations[0];
    let b = GradedSubalgebra::from_json(&g, &v.subalgebra).unwrap();
    assert_eq!(b.dim(), v.dim);
    assert!(verify_subalgebra(&b).closed);
}

#[test]
fn json_roundtrip() {
    let g = build_sp6_split();
    let w = witness_catalog(&g).unwrap().pop().unwrap();
    let j = w.subalgebra.to_json();
    let text = serde_json::to_string(&j).unwrap();
    let back: SubalgebraJson = serde_json::from_str(&text).unwrap();
    let b = GradedSubalgebra::from_json(&g, &back).unwrap();
    assert_eq!(b.profile(), w.subalgebra.profile());
    for (d, s) in b.components() {
        assert!(s.contains(&w.subalgebra.component(*d)).unwrap());
    }
    assert!(GradedSubalgebra::from_json(&build_sp21(), &back).is_err());
}
