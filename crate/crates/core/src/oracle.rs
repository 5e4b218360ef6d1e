//! Slow reference implementations for cross-checking the optimized code.
//! Compiled only with the `oracle` feature.

use crate::error::{Error, Result};
use crate::graph::{Graph, TestGraph};
use crate::homcomplex::Cell;
use crate::z2algebra::{BitMatrix, ChainComplexZ2};

/// Largest `|V(T)| * |V(G)|` accepted by [`brute_force_cells`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Every assignment of nonempty vertex sets of `g` to vertices of `t` such
/// that for any `x, y` adjacent in `t`, every element of `η(x)` is adjacent
/// to every element of `η(y)`.
pub fn brute_force_cells(t: &TestGraph, g: &Graph) -> Result<Vec<Cell>> {
    let tn = t.graph().n();
    let n = g.n();
    if tn * n > BRUTE_FORCE_LIMIT {
        return Err(Error::InvalidArgument(format!("{tn} x {n} too large for brute force")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let subsets: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    let edges: Vec<(usize, usize)> = t.graph().edges().collect();
    let mut choice = vec![0usize; tn];
    let mut out = Vec::new();
    loop {
        let ok = edges.iter().all(|&(x, y)| {
            subsets[choice[x]]
                .iter()
                .all(|&u| subsets[choice[y]].iter().all(|&w| g.has_edge(u, w)))
        });
        if ok {
            let lists: Vec<&[usize]> = choice.iter().map(|&c| subsets[c].as_slice()).collect();
            out.push(Cell::from_lists(&lists, n));
        }
        // Odometer over all functions V(T) -> subsets.
        let mut i = 0;
        loop {
            if i == tn {
                out.sort();
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < subsets.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Rank by row reduction on an unpacked `Vec<Vec<bool>>` copy.
pub fn naive_rank(m: &BitMatrix) -> usize {
    let mut rows: Vec<Vec<bool>> = (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                for k in c..m.cols() {
                    let bit = rows[rank][k];
                    rows[r][k] ^= bit;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Unreduced Betti numbers of an untruncated complex using [`naive_rank`].
pub fn naive_betti(c: &ChainComplexZ2) -> Vec<usize> {
    let sizes = c.sizes();
    let rank = |dim: usize| c.boundary(dim).map_or(0, naive_rank);
    (0..sizes.len()).map(|i| sizes[i] - rank(i) - rank(i + 1)).collect()
}

/// Smallest `k` admitting a proper coloring, found by trying all `k^n`
/// assignments for `k = 0, 1, ..`.
pub fn chromatic_by_enumeration(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > 10 {
        return Err(Error::TooLarge { n, limit: 10 });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 0..=n {
        if n == 0 {
            return Ok(0);
        }
        if k == 0 {
            continue;
        }
        let mut color = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| color[u] != color[v]) {
                return Ok(k);
            }
            let mut i = 0;
            while i < n {
                color[i] += 1;
                if color[i] < k {
                    break;
                }
                color[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice")
}
