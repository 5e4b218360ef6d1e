use homtest::bound::{homology_test, run_suite, SuiteOptions};
use homtest::graph::{
    fold_reduce, parse_dimacs, parse_edge_list, test_graph_by_name, test_graph_registry, to_dimacs, to_edge_list,
    Graph, TestGraph,
};
use homtest::homcomplex::{
    boundary_complex, build_hom, hom_is_nonempty, induced_involution, is_free, quotient_complex, BuildOptions,
    HomComplex,
};
use homtest::z2algebra::{BitMatrix, ChainComplexZ2};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn small_tests() -> Vec<TestGraph> {
    ["k2", "k3", "c5"].iter().map(|n| test_graph_by_name(n).unwrap()).collect()
}

/// Complete build, or `None` if it would be too large for a quick check.
fn small_build(t: &TestGraph, g: &Graph) -> Option<HomComplex> {
    build_hom(t, g, BuildOptions { max_dim: None, cell_cap: 20_000 }).ok()
}

/// Relabels generators by one permutation per dimension.
fn permuted(c: &ChainComplexZ2, perms: &[Vec<usize>]) -> ChainComplexZ2 {
    let boundaries = (1..c.sizes().len())
        .map(|k| {
            let d = c.boundary(k).unwrap();
            let left = BitMatrix::permutation(&perms[k - 1]);
            let right = BitMatrix::permutation(&perms[k]).transpose();
            left.mul(d).unwrap().mul(&right).unwrap()
        })
        .collect();
    ChainComplexZ2::new(c.sizes().to_vec(), boundaries, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_squares_to_zero_and_euler_matches(g in arb_graph(6)) {
        for t in small_tests() {
            let Some(h) = small_build(&t, &g) else { continue };
            let chain = boundary_complex(&h).unwrap();
            prop_assert!(chain.validate().is_ok());
            if !chain.is_empty() {
                let betti = chain.betti(false).values;
                let sum: i64 = betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
                prop_assert_eq!(sum, chain.euler_characteristic().unwrap());
            }
        }
    }

    #[test]
    fn cells_are_valid_and_faces_closed(g in arb_graph(6)) {
        for t in small_tests() {
            let Some(h) = small_build(&t, &g) else { continue };
            for dim in 0..h.f_vector().len() {
                for (i, cell) in h.cells(dim).enumerate() {
                    prop_assert!(cell.is_valid_in(t.graph(), &g));
                    prop_assert_eq!(cell.dim(), dim);
                    if dim > 0 {
                        prop_assert!(h.faces(dim, i).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn involution_is_free_and_equivariant(g in arb_graph(6)) {
        for t in test_graph_registry() {
            let Some(h) = small_build(&t, &g) else { continue };
            if h.is_empty() {
                continue;
            }
            let inv = induced_involution(&h).unwrap();
            prop_assert!(is_free(&inv));
            let chain = boundary_complex(&h).unwrap();
            prop_assert!(chain.commutes_with(&inv));
            for (dim, perm) in inv.iter().enumerate() {
                prop_assert!(perm.iter().enumerate().all(|(i, &j)| perm[j] == i));
                // The fixed cochains of a free swap are spanned by orbit sums.
                let p = BitMatrix::permutation(perm);
                let fixed = p.add(&BitMatrix::identity(perm.len())).unwrap();
                prop_assert_eq!(fixed.rank() * 2, h.count(dim));
            }
            let q = quotient_complex(&h, &inv).unwrap();
            prop_assert!(q.is_valid());
            prop_assert!(q.sizes().iter().zip(chain.sizes()).all(|(&a, &b)| 2 * a == b));
            prop_assert_eq!(chain.euler_characteristic().unwrap(), 2 * q.euler_characteristic().unwrap());
        }
    }

    #[test]
    fn betti_ignores_generator_order(g in arb_graph(5), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for t in small_tests() {
            let Some(h) = small_build(&t, &g) else { continue };
            let chain = boundary_complex(&h).unwrap();
            let perms: Vec<Vec<usize>> = chain.sizes().iter().map(|&n| {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                p
            }).collect();
            prop_assert_eq!(permuted(&chain, &perms).betti(true), chain.betti(true));
        }
    }

    #[test]
    fn folding_preserves_hom_existence(g in arb_graph(8)) {
        let folded = fold_reduce(&g).0;
        for t in test_graph_registry() {
            prop_assert_eq!(hom_is_nonempty(&t, &g), hom_is_nonempty(&t, &folded), "{}", t.name());
        }
    }

    #[test]
    fn fold_map_is_a_retraction(g in arb_graph(8)) {
        let (folded, map) = fold_reduce(&g);
        prop_assert_eq!(map.len(), g.n());
        for (u, v) in g.edges() {
            prop_assert!(folded.has_edge(map[u], map[v]));
        }
        prop_assert!(folded.check_invariants());
    }

    #[test]
    fn nonempty_hom_bounds_at_least_chi_t(g in arb_graph(6)) {
        for t in small_tests() {
            let claim = homology_test(&t, &g, 1, 200_000).unwrap();
            if !claim.empty {
                prop_assert!(claim.lower_bound.unwrap() >= t.chi());
            }
        }
    }

    #[test]
    fn more_tests_never_lower_the_bound(g in arb_graph(6)) {
        let all = small_tests();
        let opts = SuiteOptions { cell_cap: 200_000, ..SuiteOptions::default() };
        let mut previous = 0;
        for k in 0..=all.len() {
            let report = run_suite(&g, &all[..k], opts);
            prop_assert!(report.best_bound >= previous);
            previous = report.best_bound;
        }
    }

    #[test]
    fn reports_are_deterministic(g in arb_graph(6)) {
        let opts = SuiteOptions { with_exact: true, cell_cap: 200_000, ..SuiteOptions::default() };
        let a = run_suite(&g, &small_tests(), opts);
        let b = run_suite(&g, &small_tests(), opts);
        prop_assert_eq!(a.to_json_untimed(), b.to_json_untimed());
        prop_assert!(a.check().is_ok());
    }

    #[test]
    fn dimacs_roundtrips(g in arb_graph(10)) {
        prop_assert_eq!(parse_dimacs(&to_dimacs(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn registry_entries_are_valid_test_graphs() {
    for t in test_graph_registry() {
        t.check().unwrap();
        assert!(t.verified());
        assert_eq!(t.chi(), homtest::graph::chromatic_number_exact(t.graph(), 20).unwrap());
        let (u, v) = t.flipped_edge();
        assert_eq!((t.involution()[u], t.involution()[v]), (v, u));
    }
}
