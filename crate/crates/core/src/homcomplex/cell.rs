use crate::bits;
use crate::graph::Graph;

/// A multihomomorphism `T → G`: one nonempty set of `G`-vertices per
/// vertex of `T`, with every edge of `T` sent to a complete bipartite pair.
///
/// The sets are stored back to back, `words` words each, in the vertex
/// order of `T`. Cells compare lexicographically on that word sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    sets: Vec<u64>,
    words: usize,
}

impl Cell {
    pub fn from_words(sets: Vec<u64>, words: usize) -> Self {
        assert!(words > 0 && sets.len() % words == 0, "ragged cell");
        Cell { sets, words }
    }

    /// Builds a cell from explicit vertex lists (one per vertex of `T`).
    pub fn from_lists(lists: &[&[usize]], g_n: usize) -> Self {
        let words = bits::words_for(g_n).max(1);
        let mut sets = vec![0; lists.len() * words];
        for (x, list) in lists.iter().enumerate() {
            for &v in *list {
                bits::insert(&mut sets[x * words..(x + 1) * words], v);
            }
        }
        Cell { sets, words }
    }

    pub fn t_vertices(&self) -> usize {
        self.sets.len() / self.words
    }

    pub fn set(&self, x: usize) -> &[u64] {
        &self.sets[x * self.words..(x + 1) * self.words]
    }

    pub fn members(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.set(x))
    }

    pub fn as_words(&self) -> &[u64] {
        &self.sets
    }

    /// `Σ_x (|η(x)| - 1)`.
    pub fn dim(&self) -> usize {
        dim_of(&self.sets, self.words)
    }

    /// Checks the cell conditions directly against `t` and `g`.
    pub fn is_valid_in(&self, t: &Graph, g: &Graph) -> bool {
        if self.t_vertices() != t.n() {
            return false;
        }
        let nonempty = (0..t.n()).all(|x| !bits::is_empty(self.set(x)) && self.members(x).all(|v| v < g.n()));
        nonempty
            && t.edges().all(|(x, y)| {
                self.members(x).all(|u| self.members(y).all(|w| g.has_edge(u, w)))
            })
    }
}

pub(crate) fn dim_of(sets: &[u64], words: usize) -> usize {
    sets.chunks_exact(words).map(|s| bits::count(s) - 1).sum()
}
