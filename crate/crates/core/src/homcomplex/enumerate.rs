//! Backtracking enumeration of multihomomorphisms.
//!
//! Vertices of `T` are assigned in breadth-first order from the flipped
//! edge. Each vertex `x` carries a candidate set: the vertices of `G`
//! adjacent to everything already assigned to a neighbor of `x`. Subsets of
//! the candidates are grown one vertex at a time in increasing order; adding
//! a vertex only shrinks the common neighborhood handed to later neighbors,
//! so once some later neighbor is left without candidates the whole branch
//! is dropped.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};

use super::HomComplex;
use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, TestGraph};

pub const DEFAULT_CELL_CAP: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest cell dimension to build; `None` builds everything.
    pub max_dim: Option<usize>,
    pub cell_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_dim: None,
            cell_cap: DEFAULT_CELL_CAP,
        }
    }
}

impl BuildOptions {
    pub fn up_to(max_dim: usize) -> Self {
        BuildOptions {
            max_dim: Some(max_dim),
            ..Self::default()
        }
    }
}

/// Breadth-first order of `V(T)` starting at the flipped edge; other
/// components follow from their smallest vertex.
pub fn bfs_order(t: &TestGraph) -> Vec<usize> {
    let g = t.graph();
    let n = g.n();
    let (a, b) = t.flipped_edge();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let starts = [a, b].into_iter().chain(0..n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        if s == a {
            seen[b] = true;
            queue.push_back(b);
        }
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in g.neighbor_iter(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

struct Enumerator<'a> {
    t: &'a Graph,
    g: &'a Graph,
    words: usize,
    order: &'a [usize],
    pos: &'a [usize],
    max_dim: usize,
    cap: usize,
    emitted: &'a AtomicUsize,
    sets: Vec<u64>,
    out: Vec<Vec<u64>>,
}

/// A fixed choice for the first vertex of the order, with the candidate
/// sets it leaves for the rest.
struct Task {
    first: Vec<u64>,
    allowed: Vec<u64>,
    dim: usize,
}

impl Enumerator<'_> {
    fn slot(&self, x: usize) -> std::ops::Range<usize> {
        x * self.words..(x + 1) * self.words
    }

    fn forward(&self, i: usize) -> Vec<usize> {
        let x = self.order[i];
        self.t.neighbor_iter(x).filter(|&z| self.pos[z] > i).collect()
    }

    fn emit(&mut self, dim: usize) -> Result<()> {
        if self.emitted.fetch_add(1, Ordering::Relaxed) >= self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        if self.out.len() <= dim {
            self.out.resize(dim + 1, Vec::new());
        }
        self.out[dim].extend_from_slice(&self.sets);
        Ok(())
    }

    fn level(&mut self, i: usize, allowed: &[u64], dim: usize, tasks: Option<&mut Vec<Task>>) -> Result<()> {
        if i == self.order.len() {
            return self.emit(dim);
        }
        let x = self.order[i];
        let cand: Vec<usize> = bits::iter(&allowed[self.slot(x)]).collect();
        let forward = self.forward(i);
        let mut chosen = vec![0u64; self.words];
        let common = self.g.all_vertices();
        let mut tasks = tasks;
        self.grow(i, x, &cand, 0, &forward, allowed, &mut chosen, 0, &common, dim, &mut tasks)
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        i: usize,
        x: usize,
        cand: &[usize],
        start: usize,
        forward: &[usize],
        allowed: &[u64],
        chosen: &mut Vec<u64>,
        size: usize,
        common: &[u64],
        dim: usize,
        tasks: &mut Option<&mut Vec<Task>>,
    ) -> Result<()> {
        let w = self.words;
        let mut next_common = vec![0u64; w];
        for j in start..cand.len() {
            let v = cand[j];
            next_common.copy_from_slice(common);
            bits::intersect_into(&mut next_common, self.g.neighbors(v));
            let feasible = forward.iter().all(|&z| {
                allowed[z * w..(z + 1) * w]
                    .iter()
                    .zip(&next_common)
                    .any(|(a, b)| a & b != 0)
            });
            if !feasible {
                continue;
            }
            bits::insert(chosen, v);
            let cell_dim = dim + size;
            let mut next_allowed = allowed.to_vec();
            for &z in forward {
                bits::intersect_into(&mut next_allowed[z * w..(z + 1) * w], &next_common);
            }
            let r = self.slot(x);
            self.sets[r].copy_from_slice(chosen);
            match tasks {
                Some(list) => list.push(Task {
                    first: chosen.clone(),
                    allowed: next_allowed,
                    dim: cell_dim,
                }),
                None => self.level(i + 1, &next_allowed, cell_dim, None)?,
            }
            if cell_dim < self.max_dim {
                self.grow(i, x, cand, j + 1, forward, allowed, chosen, size + 1, &next_common, dim, tasks)?;
            }
            bits::remove(chosen, v);
        }
        Ok(())
    }
}

fn run_tasks<'a, F>(make: &F, tasks: Vec<Task>, x0: usize) -> Result<Vec<Vec<u64>>>
where
    F: Fn() -> Enumerator<'a> + Sync,
{
    let one = |task: Task| -> Result<Vec<Vec<u64>>> {
        let mut e = make();
        let r = e.slot(x0);
        e.sets[r].copy_from_slice(&task.first);
        e.level(1, &task.allowed, task.dim, None)?;
        Ok(e.out)
    };
    #[cfg(feature = "parallel")]
    let parts: Vec<Result<Vec<Vec<u64>>>> = {
        use rayon::prelude::*;
        tasks.into_par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Result<Vec<Vec<u64>>>> = tasks.into_iter().map(one).collect();

    let mut merged: Vec<Vec<u64>> = Vec::new();
    for part in parts {
        let part = part?;
        if merged.len() < part.len() {
            merged.resize(part.len(), Vec::new());
        }
        for (d, cells) in part.into_iter().enumerate() {
            merged[d].extend(cells);
        }
    }
    Ok(merged)
}

fn sort_cells(flat: Vec<u64>, stride: usize) -> Vec<u64> {
    let mut chunks: Vec<&[u64]> = flat.chunks_exact(stride).collect();
    chunks.sort_unstable();
    chunks.concat()
}

/// Builds the cells of `Hom(t, g)` of dimension at most `opts.max_dim`.
pub fn build_hom(t: &TestGraph, g: &Graph, opts: BuildOptions) -> Result<HomComplex> {
    let tg = t.graph();
    let words = g.words().max(1);
    let stride = tg.n() * words;
    let empty = HomComplex {
        t: t.clone(),
        g: g.clone(),
        words,
        cells: Vec::new(),
        max_dim_built: opts.max_dim,
        complete: true,
    };
    if g.n() == 0 || tg.n() == 0 {
        return Ok(empty);
    }
    let order = bfs_order(t);
    let mut pos = vec![0; tg.n()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let emitted = AtomicUsize::new(0);
    let make = || Enumerator {
        t: tg,
        g,
        words,
        order: &order,
        pos: &pos,
        max_dim: opts.max_dim.unwrap_or(usize::MAX),
        cap: opts.cell_cap,
        emitted: &emitted,
        sets: vec![0; stride],
        out: Vec::new(),
    };
    let all: Vec<u64> = (0..tg.n()).flat_map(|_| g.all_vertices()).collect();
    let mut tasks = Vec::new();
    make().level(0, &all, 0, Some(&mut tasks))?;
    let cells = run_tasks(&make, tasks, order[0])?;
    let cells: Vec<Vec<u64>> = cells.into_iter().map(|c| sort_cells(c, stride)).collect();

    let mut h = HomComplex { cells, ..empty };
    if let Some(k) = opts.max_dim {
        h.complete = (0..h.count(k)).all(|i| !h.has_coface(h.raw(k, i)));
    }
    Ok(h)
}

/// Whether some graph homomorphism `t → g` exists; stops at the first one.
pub fn hom_is_nonempty(t: &TestGraph, g: &Graph) -> bool {
    let tg = t.graph();
    if tg.n() == 0 {
        return true;
    }
    if g.n() == 0 {
        return false;
    }
    let order = bfs_order(t);
    let mut image = vec![usize::MAX; tg.n()];
    fn place(i: usize, order: &[usize], t: &Graph, g: &Graph, image: &mut [usize]) -> bool {
        let Some(&x) = order.get(i) else {
            return true;
        };
        let mut cand = g.all_vertices();
        for y in t.neighbor_iter(x) {
            if image[y] != usize::MAX {
                bits::intersect_into(&mut cand, g.neighbors(image[y]));
            }
        }
        for v in bits::iter(&cand) {
            image[x] = v;
            if place(i + 1, order, t, g, image) {
                return true;
            }
        }
        image[x] = usize::MAX;
        false
    }
    place(0, &order, tg, g, &mut image)
}
