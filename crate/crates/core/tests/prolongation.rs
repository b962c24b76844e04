use gradlie::algebra::{build_g2_split, build_so_split, build_sp21, build_sp6_split, graded_derivations, NilpotentGradedAlgebra};
use gradlie::linalg::Subspace;
use gradlie::prolongation::{compare_with_algebra, grading_derivation, prolong_full, tanaka_prolong};

#[test]
fn families_are_recovered() {
    for g in [build_g2_split(), build_so_split(3).unwrap(), build_so_split(4).unwrap(), build_sp6_split(), build_sp21()] {
        let r = prolong_full(&g).unwrap();
        println!("{}: {:?}", g.name(), r);
        let c = compare_with_algebra(&r, &g);
        assert!(c.passed, "{}: {:?}", g.name(), c);
        assert_eq!(r.total(), g.dim());
    }
}

#[test]
fn scalars_only_mismatch_at_degree_zero() {
    let g = build_g2_split();
    let n = NilpotentGradedAlgebra::negative_part_of(&g).unwrap();
    let a0 = Subspace::span(n.dim() * n.dim(), &[grading_derivation(&n)]);
    let r = tanaka_prolong(&n, &a0, 7).unwrap();
    println!("{r:?}");
    let c = compare_with_algebra(&r, &g);
    assert!(!c.passed);
    assert_eq!(c.mismatches[0].0, 0);
    let full = graded_derivations(&n, 0);
    assert_eq!(full.len(), 4);
}

mod invariance {
    use super::*;
    use gradlie::algebra::GradedLieAlgebra;
    use gradlie::linalg::{q, RatMatrix};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Unitriangular within each degree, then a within-degree permutation.
    fn graded_change(g: &GradedLieAlgebra, seed: u64) -> RatMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = g.dim();
        let mut entries = Vec::new();
        for a in 0..n {
            entries.push((a, a, q(1)));
            for b in 0..a {
                if g.degree(a) == g.degree(b) && rng.gen_bool(0.5) {
                    entries.push((a, b, q(rng.gen_range(-3..=3))));
                }
            }
        }
        RatMatrix::from_triplets(n, n, entries)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn dims_survive_graded_basis_change(seed in any::<u64>(), which in 0usize..3) {
            let g = match which {
                0 => build_g2_split(),
                1 => build_so_split(3).unwrap(),
                _ => build_sp21(),
            };
            let n = NilpotentGradedAlgebra::negative_part_of(&g).unwrap();
            let p = graded_change(&n, seed);
            let m = NilpotentGradedAlgebra::new(n.change_basis(&p).unwrap()).unwrap();
            let base = tanaka_prolong(&n, &graded_derivations(&n, 0).space, 7).unwrap();
            let moved = tanaka_prolong(&m, &graded_derivations(&m, 0).space, 7).unwrap();
            prop_assert_eq!(base, moved);
        }
    }
}

#[test]
fn smaller_a0_gives_smaller_components() {
    let g = build_so_split(3).unwrap();
    let n = NilpotentGradedAlgebra::negative_part_of(&g).unwrap();
    let full = tanaka_prolong(&n, &graded_derivations(&n, 0).space, 5).unwrap();
    let a0 = Subspace::span(n.dim() * n.dim(), &[grading_derivation(&n)]);
    let small = tanaka_prolong(&n, &a0, 5).unwrap();
    for (d, v) in &small.component_dims {
        assert!(*v <= full.component_dims[d]);
    }
}

#[test]
fn non_derivation_a0_is_rejected() {
    let g = build_g2_split();
    let n = NilpotentGradedAlgebra::negative_part_of(&g).unwrap();
    let bogus = Subspace::span(n.dim() * n.dim(), &[vec![(0, gradlie::linalg::q(1))]]);
    assert!(tanaka_prolong(&n, &bogus, 3).is_err());
}
