//! Text form of a cell list: one line per cell, `dim; m0,m1,...` with each
//! vertex set as a hexadecimal mask.

use super::{Cell, HomComplex};
use crate::bits;
use crate::error::{Error, Result};

impl HomComplex {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let dims = self.top_dim().map_or(0, |t| t + 1);
        for dim in 0..dims {
            for i in 0..self.count(dim) {
                let masks: Vec<String> = self.raw(dim, i).chunks_exact(self.words).map(bits::to_hex).collect();
                out.push_str(&format!("{dim}; {}\n", masks.join(",")));
            }
        }
        out
    }
}

/// Reads cells written by [`HomComplex::to_text`]. `words` is the number of
/// 64-bit words per vertex set of the target graph.
pub fn parse_cells_text(text: &str, words: usize) -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::parse(i + 1, msg.to_string());
        let (dim, masks) = line.split_once(';').ok_or_else(|| bad("expected `dim; masks`"))?;
        let dim: usize = dim.trim().parse().map_err(|_| bad("bad dimension"))?;
        let mut sets = Vec::new();
        for m in masks.split(',') {
            let set = bits::from_hex(m, words).ok_or_else(|| bad("bad mask"))?;
            if bits::is_empty(&set) {
                return Err(bad("empty vertex set"));
            }
            sets.extend(set);
        }
        let cell = Cell::from_words(sets, words);
        if cell.dim() != dim {
            return Err(bad("dimension does not match masks"));
        }
        cells.push(cell);
    }
    Ok(cells)
}
