//! The cell complex `Hom(T, G)` of multihomomorphisms, its boundary maps
//! over the two-element field, and the involution induced from `T`.

mod boundary;
mod cell;
mod enumerate;
mod export;

pub use boundary::{boundary_complex, DENSE_BYTES_LIMIT, SPARSE_ENTRY_LIMIT, induced_involution, is_free, quotient_complex};
pub use cell::Cell;
pub use enumerate::{bfs_order, build_hom, hom_is_nonempty, BuildOptions, DEFAULT_CELL_CAP};
pub use export::parse_cells_text;

use std::cmp::Ordering;

use crate::bits;
use crate::graph::{Graph, TestGraph};

/// `Hom(T, G)` restricted to cells of dimension at most `max_dim_built`.
///
/// Cells of each dimension are stored back to back in lexicographic order,
/// `stride = |V(T)| * words` words per cell; a cell's id is its
/// `(dimension, index)` pair.
#[derive(Clone, Debug)]
pub struct HomComplex {
    t: TestGraph,
    g: Graph,
    words: usize,
    cells: Vec<Vec<u64>>,
    max_dim_built: Option<usize>,
    complete: bool,
}

impl HomComplex {
    pub fn test_graph(&self) -> &TestGraph {
        &self.t
    }

    pub fn target(&self) -> &Graph {
        &self.g
    }

    /// Words per vertex set.
    pub fn words(&self) -> usize {
        self.words
    }

    fn stride(&self) -> usize {
        self.t.graph().n() * self.words
    }

    /// `None` when built without a dimension limit.
    pub fn max_dim_built(&self) -> Option<usize> {
        self.max_dim_built
    }

    /// True when no cell of `Hom(T, G)` is missing.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    /// Highest dimension with a stored cell.
    pub fn top_dim(&self) -> Option<usize> {
        self.cells.iter().rposition(|c| !c.is_empty())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, |c| c.len() / self.stride().max(1))
    }

    /// Cell counts per dimension, through the top dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.top_dim() {
            Some(top) => (0..=top).map(|d| self.count(d)).collect(),
            None => Vec::new(),
        }
    }

    pub fn total_cells(&self) -> usize {
        (0..self.cells.len()).map(|d| self.count(d)).sum()
    }

    pub(crate) fn raw(&self, dim: usize, index: usize) -> &[u64] {
        let s = self.stride();
        &self.cells[dim][index * s..(index + 1) * s]
    }

    pub fn cell(&self, dim: usize, index: usize) -> Cell {
        Cell::from_words(self.raw(dim, index).to_vec(), self.words)
    }

    pub fn cells(&self, dim: usize) -> impl Iterator<Item = Cell> + '_ {
        (0..self.count(dim)).map(move |i| self.cell(dim, i))
    }

    /// Index of the cell with these sets, by binary search.
    pub fn find(&self, dim: usize, sets: &[u64]) -> Option<usize> {
        let n = self.count(dim);
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.raw(dim, mid).cmp(sets) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn locate(&self, cell: &Cell) -> Option<(usize, usize)> {
        let dim = cell.dim();
        self.find(dim, cell.as_words()).map(|i| (dim, i))
    }

    /// Whether some vertex can be added to one of the sets of this cell.
    pub(crate) fn has_coface(&self, sets: &[u64]) -> bool {
        let (t, g, w) = (self.t.graph(), &self.g, self.words);
        let mut room = vec![0u64; w];
        (0..t.n()).any(|x| {
            room.copy_from_slice(&g.all_vertices());
            for y in t.neighbor_iter(x) {
                for u in bits::iter(&sets[y * w..(y + 1) * w]) {
                    bits::intersect_into(&mut room, g.neighbors(u));
                }
            }
            room.iter().zip(&sets[x * w..(x + 1) * w]).any(|(r, s)| r & !s != 0)
        })
    }
}
