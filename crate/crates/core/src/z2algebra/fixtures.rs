//! Small hand-built complexes with free involutions whose first nonzero
//! reduced homology sits below the height of the action.

use super::{BitMatrix, ChainComplexZ2};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub complex: ChainComplexZ2,
    /// One permutation of the generators per dimension.
    pub involution: Vec<Vec<usize>>,
}

fn index_of(list: &[(usize, usize)], e: (usize, usize)) -> usize {
    let key = (e.0.min(e.1), e.0.max(e.1));
    list.iter().position(|&x| x == key).expect("edge present")
}

/// Two points swapped, plus a four-edge circle under the antipodal map.
pub fn two_points_and_circle() -> Fixture {
    // Vertices 0,1 are the points; 2..6 go around the circle.
    let circle = |i: usize| 2 + i % 4;
    let d1 = BitMatrix::from_columns(6, (0..4).map(|i| [circle(i), circle(i + 1)]));
    let v_inv = vec![1, 0, 4, 5, 2, 3];
    let e_inv = (0..4).map(|i| (i + 2) % 4).collect();
    Fixture {
        name: "two points and a circle",
        complex: ChainComplexZ2::new(vec![6, 4], vec![d1], None).expect("valid fixture"),
        involution: vec![v_inv, e_inv],
    }
}

/// Octahedral 2-sphere with the antipodal map and a circle attached at each
/// pole; the involution swaps the two circles.
pub fn sphere_with_two_ears() -> Fixture {
    // Octahedron vertices: 0/1 = ±x, 2/3 = ±y, 4/5 = ±z; antipode is v ^ 1.
    let mut edges: Vec<(usize, usize)> =
        (0..6).flat_map(|a| (a + 1..6).filter(move |&b| b != (a ^ 1)).map(move |b| (a, b))).collect();
    edges.sort_unstable();
    let triangles: Vec<[usize; 3]> = (0..8).map(|s| [s & 1, 2 + (s >> 1 & 1), 4 + (s >> 2 & 1)]).collect();

    // Ears: vertex 6 hangs off the north pole 4 and vertex 7 off the south
    // pole 5, each joined by two parallel edges.
    let sphere_edges = edges.len();
    let ear_edges = [(4, 6), (4, 6), (5, 7), (5, 7)];
    let mut d1_cols: Vec<Vec<usize>> = edges.iter().map(|&(a, b)| vec![a, b]).collect();
    d1_cols.extend(ear_edges.iter().map(|&(a, b)| vec![a, b]));
    let d1 = BitMatrix::from_columns(8, d1_cols);
    let d2 = BitMatrix::from_columns(
        sphere_edges + 4,
        triangles
            .iter()
            .map(|t| [index_of(&edges, (t[0], t[1])), index_of(&edges, (t[1], t[2])), index_of(&edges, (t[0], t[2]))]),
    );

    let v_inv = vec![1, 0, 3, 2, 5, 4, 7, 6];
    let mut e_inv: Vec<usize> = edges.iter().map(|&(a, b)| index_of(&edges, (a ^ 1, b ^ 1))).collect();
    e_inv.extend([sphere_edges + 2, sphere_edges + 3, sphere_edges, sphere_edges + 1]);
    let t_inv = triangles
        .iter()
        .map(|t| triangles.iter().position(|u| *u == [t[0] ^ 1, t[1] ^ 1, t[2] ^ 1]).unwrap())
        .collect();
    Fixture {
        name: "sphere with two ears",
        complex: ChainComplexZ2::new(vec![8, sphere_edges + 4, 8], vec![d1, d2], None).expect("valid fixture"),
        involution: vec![v_inv, e_inv, t_inv],
    }
}

pub fn fixture_complexes() -> Vec<Fixture> {
    vec![two_points_and_circle(), sphere_with_two_ears()]
}
