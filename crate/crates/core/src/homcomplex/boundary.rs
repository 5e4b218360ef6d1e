use super::HomComplex;
use crate::bits;
use crate::error::{Error, Result};
use crate::z2algebra::{sparse_rank, BettiVector, BitMatrix, ChainComplexZ2};

impl HomComplex {
    /// Row indices (cells of dimension `dim - 1`) of the boundary of cell
    /// `(dim, index)`: drop one vertex from any set with at least two.
    pub fn faces(&self, dim: usize, index: usize) -> Result<Vec<usize>> {
        let w = self.words;
        let mut face = self.raw(dim, index).to_vec();
        let mut out = Vec::new();
        for x in 0..self.t.graph().n() {
            let slot = x * w..(x + 1) * w;
            if bits::count(&face[slot.clone()]) < 2 {
                continue;
            }
            let members: Vec<usize> = bits::iter(&face[slot.clone()]).collect();
            for v in members {
                bits::remove(&mut face[slot.clone()], v);
                let idx = self.find(dim - 1, &face).ok_or_else(|| {
                    Error::Invariant(format!("face of cell ({dim}, {index}) missing from the complex"))
                })?;
                out.push(idx);
                bits::insert(&mut face[slot.clone()], v);
            }
        }
        Ok(out)
    }

    /// Image of every cell under `x ↦ η(γ(x))`, one permutation per dimension.
    pub fn involution(&self) -> Result<Vec<Vec<usize>>> {
        let gamma = self.t.involution();
        let w = self.words;
        let dims = self.top_dim().map_or(0, |t| t + 1);
        (0..dims)
            .map(|dim| {
                let mut image = vec![0u64; self.stride()];
                (0..self.count(dim))
                    .map(|i| {
                        let cell = self.raw(dim, i);
                        for (x, &gx) in gamma.iter().enumerate() {
                            image[x * w..(x + 1) * w].copy_from_slice(&cell[gx * w..(gx + 1) * w]);
                        }
                        self.find(dim, &image).ok_or_else(|| {
                            Error::Invariant(format!("image of cell ({dim}, {i}) missing from the complex"))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// Largest dense boundary matrix that will be allocated.
pub const DENSE_BYTES_LIMIT: usize = 1 << 30;

impl HomComplex {
    /// Boundary map out of dimension `dim >= 1` as a dense matrix.
    pub fn boundary_matrix(&self, dim: usize) -> Result<BitMatrix> {
        let (rows, cols) = (self.count(dim - 1), self.count(dim));
        if rows.div_ceil(64).saturating_mul(cols).saturating_mul(8) > DENSE_BYTES_LIMIT {
            return Err(Error::MatrixTooLarge { rows, cols });
        }
        let cols = (0..self.count(dim)).map(|i| self.faces(dim, i)).collect::<Result<Vec<_>>>()?;
        Ok(BitMatrix::from_columns(self.count(dim - 1), cols))
    }
}

/// Entry budget for the sparse fallback (about 2 GiB of `u32`s).
pub const SPARSE_ENTRY_LIMIT: usize = 1 << 29;

impl HomComplex {
    /// Rank of the boundary map out of dimension `dim >= 1`.
    ///
    /// Dimension 1 uses connected components of the 1-skeleton. Higher
    /// maps are reduced densely when they fit in [`DENSE_BYTES_LIMIT`] and as
    /// sparse columns otherwise.
    pub fn boundary_rank(&self, dim: usize) -> Result<usize> {
        if self.count(dim) == 0 || self.count(dim - 1) == 0 {
            return Ok(0);
        }
        if dim == 1 {
            return self.edge_boundary_rank();
        }
        match self.boundary_matrix(dim) {
            Ok(m) => Ok(m.rank()),
            Err(Error::MatrixTooLarge { .. }) => {
                let mut failure = None;
                let cols = (0..self.count(dim)).map_while(|i| match self.faces(dim, i) {
                    Ok(f) => Some(f.into_iter().map(|x| x as u32).collect()),
                    Err(e) => {
                        failure = Some(e);
                        None
                    }
                });
                let rank = sparse_rank(self.count(dim - 1), cols, SPARSE_ENTRY_LIMIT)?;
                match failure {
                    Some(e) => Err(e),
                    None => Ok(rank),
                }
            }
            Err(e) => Err(e),
        }
    }

    /// Rank of the boundary out of dimension 1, via connected components of
    /// the 1-skeleton; every 1-cell has exactly two vertices.
    pub fn edge_boundary_rank(&self) -> Result<usize> {
        let mut parent: Vec<usize> = (0..self.count(0)).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        for i in 0..self.count(1) {
            let ends = self.faces(1, i)?;
            let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
            if a != b {
                parent[a] = b;
                rank += 1;
            }
        }
        Ok(rank)
    }
}

impl HomComplex {
    /// Betti numbers through the highest certified dimension, like
    /// [`ChainComplexZ2::betti`], but with ranks from
    /// [`HomComplex::boundary_rank`] so no dense matrix is required.
    pub fn betti(&self, reduced: bool) -> Result<BettiVector> {
        let Some(top) = self.top_dim() else {
            return Ok(BettiVector {
                reduced,
                values: Vec::new(),
                complete_through: None,
                empty: true,
            });
        };
        let certified = if self.is_complete() { Some(top) } else { top.checked_sub(1) };
        let Some(certified) = certified else {
            return Ok(BettiVector {
                reduced,
                values: Vec::new(),
                complete_through: None,
                empty: false,
            });
        };
        let ranks = (1..=(certified + 1).min(top))
            .map(|dim| self.boundary_rank(dim))
            .collect::<Result<Vec<_>>>()?;
        let rank = |dim: usize| dim.checked_sub(1).and_then(|k| ranks.get(k).copied()).unwrap_or(0);
        let mut values = (0..=certified)
            .map(|i| {
                self.count(i)
                    .checked_sub(rank(i) + rank(i + 1))
                    .ok_or_else(|| Error::Invariant(format!("negative Betti number in dimension {i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if reduced {
            values[0] -= 1;
        }
        Ok(BettiVector {
            reduced,
            values,
            complete_through: Some(certified),
            empty: false,
        })
    }
}

/// Boundary matrices of all stored cells.
///
/// If the complex was cut off at a dimension that still has cofaces, the
/// result is marked truncated above that dimension.
pub fn boundary_complex(h: &HomComplex) -> Result<ChainComplexZ2> {
    let Some(top) = h.top_dim() else {
        return Ok(ChainComplexZ2::empty());
    };
    let sizes: Vec<usize> = (0..=top).map(|d| h.count(d)).collect();
    let boundaries = (1..=top).map(|dim| h.boundary_matrix(dim)).collect::<Result<Vec<_>>>()?;
    let truncated = if h.is_complete() { None } else { h.max_dim_built() };
    Ok(ChainComplexZ2::new_unchecked(sizes, boundaries, truncated))
}

pub fn induced_involution(h: &HomComplex) -> Result<Vec<Vec<usize>>> {
    h.involution()
}

/// True iff `inv` moves every cell.
pub fn is_free(inv: &[Vec<usize>]) -> bool {
    inv.iter().all(|p| p.iter().enumerate().all(|(i, &j)| i != j))
}

/// Orbit complex `Hom(T, G) / Z2`; fails unless the involution is free.
pub fn quotient_complex(h: &HomComplex, inv: &[Vec<usize>]) -> Result<ChainComplexZ2> {
    boundary_complex(h)?.quotient(inv)
}
