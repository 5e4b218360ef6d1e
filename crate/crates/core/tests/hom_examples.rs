use homtest::bound::fold_equivalence_check;
use homtest::graph::{complete_graph, cycle_graph, disjoint_union, k4_with_path, test_graph_by_name, Graph, TestGraph};
use homtest::homcomplex::{
    bfs_order, boundary_complex, build_hom, hom_is_nonempty, induced_involution, is_free, parse_cells_text,
    quotient_complex, BuildOptions, Cell, HomComplex,
};
use homtest::Error;

fn tg(name: &str) -> TestGraph {
    test_graph_by_name(name).unwrap()
}

fn k(m: usize) -> Graph {
    complete_graph(m).unwrap()
}

fn full(t: &str, g: &Graph) -> HomComplex {
    build_hom(&tg(t), g, BuildOptions::default()).unwrap()
}

#[test]
fn hom_k2_k2_is_two_points() {
    let h = full("k2", &k(2));
    assert_eq!(h.f_vector(), vec![2]);
    let cells: Vec<Cell> = h.cells(0).collect();
    assert_eq!(cells, vec![Cell::from_lists(&[&[0], &[1]], 2), Cell::from_lists(&[&[1], &[0]], 2)]);
    let chain = boundary_complex(&h).unwrap();
    assert_eq!(chain.betti(false).values, vec![2]);
    assert_eq!(chain.betti(true).values, vec![1]);
}

#[test]
fn hom_k2_k4_is_a_sphere() {
    let h = full("k2", &k(4));
    assert_eq!(h.f_vector(), vec![12, 24, 14]);
    assert!(h.is_complete());
    assert_eq!(h.boundary_rank(1).unwrap(), 11);
    assert_eq!(h.boundary_rank(2).unwrap(), 13);
    assert_eq!(boundary_complex(&h).unwrap().betti(true).values, vec![0, 0, 1]);
}

#[test]
fn hom_c5_k4_vertex_count() {
    let h = build_hom(&tg("c5"), &k(4), BuildOptions::up_to(0)).unwrap();
    assert_eq!(h.count(0), 240);
    assert!(!h.is_complete());
}

#[test]
fn hexagon_edges_have_two_faces() {
    let h = full("k2", &k(3));
    assert_eq!(h.f_vector(), vec![6, 6]);
    let d1 = h.boundary_matrix(1).unwrap();
    assert!((0..d1.cols()).all(|c| d1.col_support(c).count() == 2));
}

#[test]
fn nonemptiness_examples() {
    assert!(!hom_is_nonempty(&tg("c5"), &k(2)));
    assert!(hom_is_nonempty(&tg("k3"), &disjoint_union(&k(2), &k(3))));
    assert!(!hom_is_nonempty(&tg("k5"), &k(4)));
    assert!(!hom_is_nonempty(&tg("k2"), &Graph::empty(3)));
}

#[test]
fn truncated_builds_are_prefixes() {
    let g = k4_with_path(4).unwrap();
    let whole = full("c5", &g);
    for max_dim in 0..3 {
        let part = build_hom(&tg("c5"), &g, BuildOptions::up_to(max_dim)).unwrap();
        assert_eq!(part.f_vector(), whole.f_vector()[..=max_dim].to_vec());
        let chain = boundary_complex(&part).unwrap();
        assert_eq!(chain.truncated_above(), Some(max_dim));
    }
}

#[test]
fn cell_cap_is_reported() {
    let err = build_hom(&tg("c7"), &k(5), BuildOptions { max_dim: None, cell_cap: 1000 }).unwrap_err();
    assert_eq!(err, Error::CapExceeded { cap: 1000 });
    assert!(err.is_resource_limit());
}

#[test]
fn bfs_order_starts_at_flipped_edge() {
    let t = tg("c7");
    let order = bfs_order(&t);
    assert_eq!(&order[..2], &[0, 6]);
    let mut sorted = order.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..7).collect::<Vec<_>>());
}

#[test]
fn involution_examples() {
    let h = full("k2", &k(2));
    let inv = induced_involution(&h).unwrap();
    assert_eq!(inv, vec![vec![1, 0]]);

    let h = full("k2", &k(4));
    let inv = induced_involution(&h).unwrap();
    assert_eq!(inv.iter().map(Vec::len).sum::<usize>(), 50);
    assert!(is_free(&inv));

    let h = full("c5", &k(4));
    assert!(is_free(&induced_involution(&h).unwrap()));

    assert!(!is_free(&[vec![0, 1], vec![0]]));
}

#[test]
fn involution_on_two_cycles() {
    // Hom(C5, K2+K3) is two disjoint cycles; record how the involution acts.
    let g = disjoint_union(&k(2), &k(3));
    let h = full("c5", &g);
    let inv = induced_involution(&h).unwrap();
    assert!(is_free(&inv));
    // Every homomorphism C5 -> K2+K3 lands in the triangle (vertices 2..5).
    assert!(h.cells(0).all(|c| (0..5).all(|x| c.members(x).all(|v| v >= 2))));
    let component = components(&h);
    let mut roots = component.clone();
    roots.sort_unstable();
    roots.dedup();
    assert_eq!(roots.len(), 2);
    // The two cycles are the two orientations of the triangle; the
    // reflection reverses orientation, so it exchanges them.
    assert!((0..h.count(0)).all(|v| component[v] != component[inv[0][v]]));
}

fn components(h: &HomComplex) -> Vec<usize> {
    let n = h.count(0);
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for e in 0..h.count(1) {
            let ends = h.faces(1, e).unwrap();
            let m = label[ends[0]].min(label[ends[1]]);
            for v in ends {
                if label[v] != m {
                    label[v] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

#[test]
fn quotient_examples() {
    let h = full("k2", &k(2));
    let q = quotient_complex(&h, &induced_involution(&h).unwrap()).unwrap();
    assert_eq!(q.betti(false).values, vec![1]);

    let h = full("k2", &k(4));
    let q = quotient_complex(&h, &induced_involution(&h).unwrap()).unwrap();
    assert_eq!(q.sizes(), &[6, 12, 7]);
    assert_eq!(q.euler_characteristic().unwrap(), 1);

    let h = full("k2", &k(3));
    let q = quotient_complex(&h, &induced_involution(&h).unwrap()).unwrap();
    assert_eq!(q.betti(false).values, vec![1, 1]);
}

#[test]
fn quotient_rejects_fixed_points() {
    let h = full("k2", &k(2));
    assert!(quotient_complex(&h, &[vec![0, 1]]).is_err());
}

#[test]
fn text_export_roundtrips() {
    let h = full("c5", &k4_with_path(4).unwrap());
    let text = h.to_text();
    assert_eq!(text.lines().count(), h.total_cells());
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("0; "), "{first}");
    let parsed = parse_cells_text(&text, h.words()).unwrap();
    let stored: Vec<Cell> = (0..h.f_vector().len()).flat_map(|d| h.cells(d).collect::<Vec<_>>()).collect();
    assert_eq!(parsed, stored);
    assert!(parse_cells_text("1; 3,zz", 1).is_err());
}

#[test]
fn example_two_graph_shares_hom_with_k4() {
    let g = k4_with_path(4).unwrap();
    let h = full("c5", &g);
    let reference = full("c5", &k(4));
    let (a, b) = (boundary_complex(&h).unwrap().betti(false), boundary_complex(&reference).unwrap().betti(false));
    assert_eq!(a.trimmed(), b.trimmed());
    assert_eq!(b.values, vec![1, 1, 1, 1]);
}

#[test]
fn fold_equivalence_examples() {
    let opts = BuildOptions::default();
    assert!(fold_equivalence_check(&tg("c5"), &k4_with_path(4).unwrap(), opts).unwrap());
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(fold_equivalence_check(&tg("k2"), &star, opts).unwrap());
    assert!(fold_equivalence_check(&tg("k3"), &cycle_graph(6).unwrap(), opts).unwrap());
}

#[test]
fn rank_based_betti_matches_matrices() {
    let g = k4_with_path(4).unwrap();
    for t in ["k2", "k3", "c5"] {
        for opts in [BuildOptions::default(), BuildOptions::up_to(2), BuildOptions::up_to(0)] {
            let h = build_hom(&tg(t), &g, opts).unwrap();
            for reduced in [true, false] {
                assert_eq!(h.betti(reduced).unwrap(), boundary_complex(&h).unwrap().betti(reduced), "{t} {opts:?}");
            }
        }
    }
    let h = full("k3", &Graph::empty(3));
    assert!(h.betti(true).unwrap().empty);
}
