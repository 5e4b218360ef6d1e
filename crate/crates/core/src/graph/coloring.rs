use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Hard ceiling for the exact search: color sets are tracked in a `u128`.
const MAX_EXACT: usize = 128;

/// Colors greedily in order of decreasing degree (ties by id) and returns
/// the number of colors used.
pub fn greedy_upper_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    let mut taken = Vec::new();
    for &v in &order {
        taken.clear();
        taken.resize(used + 1, false);
        for u in g.neighbor_iter(v) {
            if color[u] != usize::MAX {
                taken[color[u]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

struct Search<'a> {
    g: &'a Graph,
    color: Vec<Option<usize>>,
    /// Bit `c` set when some neighbor already has color `c`.
    sat: Vec<u128>,
    best: usize,
}

impl Search<'_> {
    fn pick(&self) -> Option<Vertex> {
        (0..self.g.n())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.sat[v].count_ones(), self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn run(&mut self, colored: usize, used: usize) {
        if used >= self.best {
            return;
        }
        if colored == self.g.n() {
            self.best = used;
            return;
        }
        let v = self.pick().expect("uncolored vertex remains");
        // Colors beyond `used` are interchangeable, so try only one new color.
        for c in 0..=used.min(self.best - 1) {
            if self.sat[v] >> c & 1 == 1 {
                continue;
            }
            let next_used = used.max(c + 1);
            if next_used >= self.best {
                continue;
            }
            self.color[v] = Some(c);
            let saved: Vec<(Vertex, u128)> = self.g.neighbor_iter(v).map(|u| (u, self.sat[u])).collect();
            for &(u, _) in &saved {
                self.sat[u] |= 1 << c;
            }
            self.run(colored + 1, next_used);
            for (u, s) in saved {
                self.sat[u] = s;
            }
            self.color[v] = None;
        }
    }
}

/// Exact chromatic number by DSATUR branch and bound.
///
/// Returns 0 for the empty graph and 1 for a nonempty edgeless one.
pub fn chromatic_number_exact(g: &Graph, limit: usize) -> Result<usize> {
    let limit = limit.min(MAX_EXACT);
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let mut s = Search {
        g,
        color: vec![None; g.n()],
        sat: vec![0; g.n()],
        best: greedy_upper_bound(g),
    };
    let greedy = s.best;
    // Search for strictly fewer colors than greedy found.
    s.run(0, 0);
    debug_assert!(s.best <= greedy);
    Ok(s.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, disjoint_union, k4_with_path};

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_upper_bound(&complete_graph(4).unwrap()), 4);
        assert_eq!(greedy_upper_bound(&Graph::empty(3)), 1);
        assert_eq!(greedy_upper_bound(&cycle_graph(5).unwrap()), 3);
        assert_eq!(greedy_upper_bound(&Graph::empty(0)), 0);
    }

    #[test]
    fn exact_examples() {
        let ex1 = disjoint_union(&complete_graph(2).unwrap(), &complete_graph(3).unwrap());
        assert_eq!(chromatic_number_exact(&ex1, 20).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&k4_with_path(4).unwrap(), 20).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&Graph::empty(5), 20).unwrap(), 1);
        assert_eq!(chromatic_number_exact(&Graph::empty(0), 20).unwrap(), 0);
        assert_eq!(chromatic_number_exact(&cycle_graph(7).unwrap(), 20).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&cycle_graph(8).unwrap(), 20).unwrap(), 2);
        assert_eq!(chromatic_number_exact(&complete_graph(6).unwrap(), 20).unwrap(), 6);
    }

    #[test]
    fn exact_respects_limit() {
        let g = Graph::empty(21);
        assert_eq!(
            chromatic_number_exact(&g, DEFAULT_EXACT_LIMIT),
            Err(Error::TooLarge { n: 21, limit: 20 })
        );
        assert_eq!(chromatic_number_exact(&g, 30).unwrap(), 1);
    }

    #[test]
    fn greedy_can_be_beaten() {
        // Crown graph on 8 vertices: bipartite, but greedy in id order is poor.
        let edges = (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (2 * i, 2 * j + 1)));
        let g = Graph::from_edges(8, edges).unwrap();
        assert_eq!(chromatic_number_exact(&g, 20).unwrap(), 2);
        assert!(greedy_upper_bound(&g) >= 2);
    }
}
