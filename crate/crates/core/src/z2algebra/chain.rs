use serde::{Deserialize, Serialize};

use super::BitMatrix;
use crate::error::{Error, Result};

/// A finite chain complex over the two-element field.
///
/// `boundaries[k]` is the boundary map from dimension `k + 1` to dimension
/// `k`, with `sizes[k]` rows and `sizes[k + 1]` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexZ2 {
    sizes: Vec<usize>,
    boundaries: Vec<BitMatrix>,
    truncated_above: Option<usize>,
}

/// Where [`ChainComplexZ2::validate`] found a problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainDefect {
    /// `D_dim` has the wrong shape.
    Shape { dim: usize },
    /// `D_{dim} · D_{dim+1}` is nonzero on column `column` of `D_{dim+1}`.
    NonzeroComposite { dim: usize, column: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub reduced: bool,
    /// `values[i]` for `i` in `0..=complete_through`.
    pub values: Vec<usize>,
    /// Highest certified dimension; `None` for the empty complex.
    pub complete_through: Option<usize>,
    /// Set for the complex with no cells, whose reduced homology is not
    /// reported as numbers.
    pub empty: bool,
}

impl BettiVector {
    pub fn get(&self, dim: usize) -> Result<usize> {
        match self.complete_through {
            Some(top) if dim <= top => Ok(self.values[dim]),
            certified => Err(Error::Truncated {
                requested: dim,
                certified,
            }),
        }
    }

    /// Smallest dimension with a nonzero value, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.values.iter().position(|&b| b != 0)
    }

    /// Values with trailing zeros removed.
    pub fn trimmed(&self) -> &[usize] {
        let end = self.values.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
        &self.values[..end]
    }
}

impl ChainComplexZ2 {
    /// Assembles a complex; `boundaries[k]` maps dimension `k + 1` to `k`.
    pub fn new(sizes: Vec<usize>, boundaries: Vec<BitMatrix>, truncated_above: Option<usize>) -> Result<Self> {
        let c = ChainComplexZ2 {
            sizes,
            boundaries,
            truncated_above,
        };
        match c.validate() {
            Ok(()) => Ok(c),
            Err(defect) => Err(Error::Invariant(format!("invalid chain complex: {defect:?}"))),
        }
    }

    /// Assembles without checking `D · D = 0`; shapes are still required.
    pub fn new_unchecked(sizes: Vec<usize>, boundaries: Vec<BitMatrix>, truncated_above: Option<usize>) -> Self {
        ChainComplexZ2 {
            sizes,
            boundaries,
            truncated_above,
        }
    }

    pub fn empty() -> Self {
        ChainComplexZ2::new_unchecked(Vec::new(), Vec::new(), None)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn truncated_above(&self) -> Option<usize> {
        self.truncated_above
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.iter().all(|&s| s == 0)
    }

    /// Boundary map out of dimension `dim >= 1`.
    pub fn boundary(&self, dim: usize) -> Option<&BitMatrix> {
        dim.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    pub fn boundary_mut(&mut self, dim: usize) -> Option<&mut BitMatrix> {
        dim.checked_sub(1).and_then(move |k| self.boundaries.get_mut(k))
    }

    /// Checks matrix shapes and `D_i · D_{i+1} = 0`.
    pub fn validate(&self) -> std::result::Result<(), ChainDefect> {
        if self.boundaries.len() + 1 != self.sizes.len() && !(self.sizes.is_empty() && self.boundaries.is_empty()) {
            return Err(ChainDefect::Shape {
                dim: self.boundaries.len() + 1,
            });
        }
        for (k, d) in self.boundaries.iter().enumerate() {
            if d.rows() != self.sizes[k] || d.cols() != self.sizes[k + 1] {
                return Err(ChainDefect::Shape { dim: k + 1 });
            }
        }
        for k in 1..self.boundaries.len() {
            let (lower, upper) = (&self.boundaries[k - 1], &self.boundaries[k]);
            let mut acc = vec![0u64; crate::bits::words_for(lower.rows())];
            for j in 0..upper.cols() {
                acc.iter_mut().for_each(|w| *w = 0);
                for r in upper.col_support(j) {
                    for (a, b) in acc.iter_mut().zip(lower.col(r)) {
                        *a ^= b;
                    }
                }
                if acc.iter().any(|&w| w != 0) {
                    return Err(ChainDefect::NonzeroComposite { dim: k, column: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Ranks of `D_1, D_2, ..` (index `k` holds `rank D_{k+1}`).
    pub fn boundary_ranks(&self) -> Vec<usize> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            self.boundaries.par_iter().map(boundary_rank).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.boundaries.iter().map(boundary_rank).collect()
        }
    }

    /// Betti numbers through the highest certified dimension.
    ///
    /// A complex truncated above dimension `m + 1` is certified through `m`.
    pub fn betti(&self, reduced: bool) -> BettiVector {
        if self.is_empty() {
            return BettiVector {
                reduced,
                values: Vec::new(),
                complete_through: None,
                empty: true,
            };
        }
        let ranks = self.boundary_ranks();
        let rank = |dim: usize| -> usize { dim.checked_sub(1).and_then(|k| ranks.get(k).copied()).unwrap_or(0) };
        let top = self.sizes.len() - 1;
        let certified = match self.truncated_above {
            Some(t) if t <= top => t.checked_sub(1),
            _ => Some(top),
        };
        let Some(certified) = certified else {
            return BettiVector {
                reduced,
                values: Vec::new(),
                complete_through: None,
                empty: false,
            };
        };
        let mut values: Vec<usize> = (0..=certified)
            .map(|i| {
                let r = rank(i) + rank(i + 1);
                assert!(r <= self.sizes[i], "rank exceeds generator count in dimension {i}");
                self.sizes[i] - r
            })
            .collect();
        if reduced {
            values[0] -= 1;
        }
        BettiVector {
            reduced,
            values,
            complete_through: Some(certified),
            empty: false,
        }
    }

    /// Alternating sum of generator counts.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.truncated_above.is_some() {
            return Err(Error::InvalidArgument("Euler characteristic of a truncated complex".into()));
        }
        Ok(self
            .sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| if i % 2 == 0 { s as i64 } else { -(s as i64) })
            .sum())
    }

    /// Checks that `perm` (one permutation per dimension) is a chain map:
    /// `∂(perm c) = perm(∂c)` for every generator `c`.
    pub fn commutes_with(&self, perm: &[Vec<usize>]) -> bool {
        if perm.len() != self.sizes.len() || perm.iter().zip(&self.sizes).any(|(p, &s)| p.len() != s) {
            return false;
        }
        self.boundaries.iter().enumerate().all(|(k, d)| {
            (0..d.cols()).all(|c| {
                let mut image: Vec<usize> = d.col_support(c).map(|r| perm[k][r]).collect();
                image.sort_unstable();
                let direct: Vec<usize> = d.col_support(perm[k + 1][c]).collect();
                image == direct
            })
        })
    }

    /// Orbit complex of a free involution.
    ///
    /// Orbits are numbered by their smallest member. The coefficient of orbit
    /// `[f]` in `∂[c]` is the multiplicity of `f` plus that of `inv(f)` in
    /// `∂c`, taken mod 2.
    pub fn quotient(&self, inv: &[Vec<usize>]) -> Result<ChainComplexZ2> {
        if inv.len() != self.sizes.len() || inv.iter().zip(&self.sizes).any(|(p, &s)| p.len() != s) {
            return Err(Error::InvalidArgument("involution does not match complex".into()));
        }
        let mut orbit_of = Vec::with_capacity(inv.len());
        let mut reps = Vec::with_capacity(inv.len());
        for (dim, p) in inv.iter().enumerate() {
            let mut ids = vec![usize::MAX; p.len()];
            let mut r = Vec::with_capacity(p.len() / 2);
            for c in 0..p.len() {
                let partner = p[c];
                if partner >= p.len() || p[partner] != c {
                    return Err(Error::InvalidArgument(format!("not an involution in dimension {dim}")));
                }
                if partner == c {
                    return Err(Error::NotFree { dim, index: c });
                }
                if c < partner {
                    ids[c] = r.len();
                    ids[partner] = r.len();
                    r.push(c);
                }
            }
            orbit_of.push(ids);
            reps.push(r);
        }
        let sizes: Vec<usize> = reps.iter().map(Vec::len).collect();
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(k, d)| {
                BitMatrix::from_columns(
                    sizes[k],
                    reps[k + 1]
                        .iter()
                        .map(|&c| d.col_support(c).map(|f| orbit_of[k][f]).collect::<Vec<_>>()),
                )
            })
            .collect();
        Ok(ChainComplexZ2::new_unchecked(sizes, boundaries, self.truncated_above))
    }
}

/// Boundary maps out of dimension 1 have exactly two nonzero entries per
/// column, so their rank is `rows - components` of the underlying graph.
pub fn boundary_rank(d: &BitMatrix) -> usize {
    let graph_like = (0..d.cols()).all(|c| d.col_support(c).count() == 2);
    if !graph_like {
        return d.rank();
    }
    let mut parent: Vec<usize> = (0..d.rows()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rank = 0;
    for c in 0..d.cols() {
        let mut ends = d.col_support(c);
        let (a, b) = (ends.next().unwrap(), ends.next().unwrap());
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            rank += 1;
        }
    }
    rank
}

pub fn betti(c: &ChainComplexZ2, reduced: bool) -> BettiVector {
    c.betti(reduced)
}

pub fn euler_characteristic(c: &ChainComplexZ2) -> Result<i64> {
    c.euler_characteristic()
}
