//! Simple undirected loopless graphs with bit-packed adjacency rows.

mod build;
mod coloring;
mod fold;
mod parse;
mod registry;

pub use build::{attach_path, complete_graph, cycle_graph, disjoint_union, glue_vertices, k4_with_path};
pub use coloring::{chromatic_number_exact, greedy_upper_bound, DEFAULT_EXACT_LIMIT};
pub use fold::fold_reduce;
pub use parse::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list};
pub use registry::{registry_names, test_graph_by_name, test_graph_registry, TestGraph};

use crate::bits;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency relation is a bitmask of width `n`, stored as
/// `words` consecutive `u64`s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    /// Builds a graph from an edge iterator, deduplicating and symmetrizing.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        let w = self.words;
        bits::insert(&mut self.adj[u * w..(u + 1) * w], v);
        bits::insert(&mut self.adj[v * w..(v + 1) * w], u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `u64` words in each adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbor_iter(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits::iter(self.neighbors(v))
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        bits::contains(self.neighbors(u), v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        bits::count(self.neighbors(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbor_iter(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Bitmask with every vertex set.
    pub fn all_vertices(&self) -> Vec<u64> {
        let mut s = vec![0; self.words];
        for v in 0..self.n {
            bits::insert(&mut s, v);
        }
        s
    }

    /// The subgraph induced on `keep` (in increasing order), renumbered `0..keep.len()`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut g = Graph::empty(keep.len());
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in keep.iter().enumerate() {
            for u in self.neighbor_iter(v) {
                let j = pos[u];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j).expect("induced subgraph of a loopless graph");
                }
            }
        }
        g.labels = Some(keep.iter().map(|&v| self.label(v)).collect());
        g
    }

    /// Structural equality ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// Checks symmetry and looplessness of the stored rows.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && self.neighbor_iter(u).all(|v| v < self.n && self.has_edge(v, u))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_symmetrizes_and_rejects_loops() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 2) && g.has_edge(2, 1));
        assert!(g.check_invariants());
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn wide_graphs_span_words() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65)]).unwrap();
        assert_eq!(g.words(), 3);
        assert_eq!(g.neighbor_iter(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 129), (64, 65)]);
    }

    #[test]
    fn induced_keeps_labels() {
        let g = complete_graph(4).unwrap();
        let h = g.induced(&[1, 3]);
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.label(1), "3");
    }
}
