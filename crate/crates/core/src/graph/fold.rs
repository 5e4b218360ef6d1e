use super::{Graph, Vertex};
use crate::bits;

/// Deletes folds until none remain.
///
/// A vertex `u` folds onto `v != u` when `N(u) ⊆ N(v)`. Each step removes
/// the smallest foldable `u` onto its smallest witness `v`. Returns the
/// reduced graph (survivors renumbered in increasing order, labelled with
/// their original labels) and, for every original vertex, the id of the
/// survivor it was folded onto.
pub fn fold_reduce(g: &Graph) -> (Graph, Vec<Vertex>) {
    let n = g.n();
    let w = g.words();
    let mut alive = g.all_vertices();
    let mut onto: Vec<Vertex> = (0..n).collect();
    let mut nbhd = vec![0u64; w];
    let mut common = vec![0u64; w];

    loop {
        let mut step = None;
        for u in bits::iter(&alive) {
            nbhd.copy_from_slice(g.neighbors(u));
            bits::intersect_into(&mut nbhd, &alive);
            // v is a witness iff v is adjacent to every neighbor of u.
            common.copy_from_slice(&alive);
            for x in bits::iter(&nbhd) {
                bits::intersect_into(&mut common, g.neighbors(x));
            }
            bits::remove(&mut common, u);
            if let Some(v) = bits::iter(&common).next() {
                step = Some((u, v));
                break;
            }
        }
        match step {
            Some((u, v)) => {
                bits::remove(&mut alive, u);
                onto[u] = v;
            }
            None => break,
        }
    }

    let survivors: Vec<Vertex> = bits::iter(&alive).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in survivors.iter().enumerate() {
        new_id[v] = i;
    }
    let map = (0..n)
        .map(|mut v| {
            while onto[v] != v {
                v = onto[v];
            }
            new_id[v]
        })
        .collect();
    (g.induced(&survivors), map)
}
