//! Test graphs: a graph with an edge-flipping involution and its chromatic number.

use super::{chromatic_number_exact, complete_graph, cycle_graph, Graph, Vertex, DEFAULT_EXACT_LIMIT};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestGraph {
    name: String,
    graph: Graph,
    involution: Vec<Vertex>,
    flipped_edge: (Vertex, Vertex),
    chi: usize,
    verified: bool,
}

impl TestGraph {
    /// Wraps a user-supplied graph and involution.
    ///
    /// The involution is checked to be an automorphism of order two that
    /// swaps the endpoints of `flipped_edge`; `chi` is computed exactly. The
    /// result is marked unverified since nothing is known about its
    /// Stiefel-Whitney height.
    pub fn new(
        name: impl Into<String>,
        graph: Graph,
        involution: Vec<Vertex>,
        flipped_edge: (Vertex, Vertex),
    ) -> Result<Self> {
        let chi = chromatic_number_exact(&graph, DEFAULT_EXACT_LIMIT)?;
        let t = TestGraph {
            name: name.into(),
            graph,
            involution,
            flipped_edge,
            chi,
            verified: false,
        };
        t.check()?;
        Ok(t)
    }

    fn known(name: String, graph: Graph, involution: Vec<Vertex>, flipped_edge: (Vertex, Vertex), chi: usize) -> Self {
        TestGraph {
            name,
            graph,
            involution,
            flipped_edge,
            chi,
            verified: true,
        }
    }

    /// Checks the involution, automorphism and edge-flip conditions.
    pub fn check(&self) -> Result<()> {
        let g = &self.graph;
        let inv = &self.involution;
        let n = g.n();
        if inv.len() != n || inv.iter().any(|&x| x >= n) {
            return Err(Error::InvalidArgument(format!("{}: involution is not a map on 0..{n}", self.name)));
        }
        if (0..n).any(|x| inv[inv[x]] != x) {
            return Err(Error::InvalidArgument(format!("{}: map does not square to the identity", self.name)));
        }
        if g.edges().any(|(u, v)| !g.has_edge(inv[u], inv[v])) {
            return Err(Error::InvalidArgument(format!("{}: involution is not an automorphism", self.name)));
        }
        let (u, v) = self.flipped_edge;
        if u >= n || v >= n || !g.has_edge(u, v) || inv[u] != v {
            return Err(Error::InvalidArgument(format!("{}: edge ({u}, {v}) is not flipped", self.name)));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn involution(&self) -> &[Vertex] {
        &self.involution
    }

    pub fn flipped_edge(&self) -> (Vertex, Vertex) {
        self.flipped_edge
    }

    pub fn chi(&self) -> usize {
        self.chi
    }

    /// False for user-supplied graphs not known to be Stiefel-Whitney test graphs.
    pub fn verified(&self) -> bool {
        self.verified
    }

    /// `K_m` with the transposition of vertices 0 and 1.
    pub fn complete(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("test graph K_m needs m >= 2".into()));
        }
        let mut inv: Vec<Vertex> = (0..m).collect();
        inv.swap(0, 1);
        Ok(Self::known(format!("k{m}"), complete_graph(m)?, inv, (0, 1), m))
    }

    /// `C_k` (odd `k`) with the reflection `x ↦ k-1-x`, flipping edge `(0, k-1)`.
    pub fn odd_cycle(k: usize) -> Result<Self> {
        if k < 3 || k % 2 == 0 {
            return Err(Error::InvalidArgument(format!("test cycle needs odd k >= 3, got {k}")));
        }
        let inv = (0..k).map(|x| k - 1 - x).collect();
        Ok(Self::known(format!("c{k}"), cycle_graph(k)?, inv, (0, k - 1), 3))
    }
}

/// K2..K5 and C5, C7, C9.
pub fn test_graph_registry() -> Vec<TestGraph> {
    let mut out: Vec<TestGraph> = (2..=5).map(|m| TestGraph::complete(m).unwrap()).collect();
    out.extend([5, 7, 9].map(|k| TestGraph::odd_cycle(k).unwrap()));
    out
}

pub fn registry_names() -> Vec<String> {
    test_graph_registry().iter().map(|t| t.name().to_string()).collect()
}

/// Looks up a registry entry by its lowercase name (`k2`, `c5`, ...).
pub fn test_graph_by_name(name: &str) -> Option<TestGraph> {
    let name = name.trim().to_ascii_lowercase();
    test_graph_registry().into_iter().find(|t| t.name == name)
}
