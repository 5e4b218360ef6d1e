use std::fmt;

use crate::bits;

/// A dense matrix over the two-element field, stored column by column.
///
/// Each column is `stride` packed `u64` words; row `r` of column `c` is bit
/// `r % 64` of word `c * stride + r / 64`.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = bits::words_for(rows);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; stride * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from per-column row lists; repeated rows cancel.
    pub fn from_columns<I, C>(rows: usize, columns: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = usize>,
    {
        let stride = bits::words_for(rows);
        let mut data = Vec::new();
        let mut cols = 0;
        for col in columns {
            let start = data.len();
            data.resize(start + stride, 0);
            for r in col {
                assert!(r < rows, "row {r} out of range for {rows} rows");
                data[start + r / 64] ^= 1 << (r % 64);
            }
            cols += 1;
        }
        BitMatrix {
            rows,
            cols,
            stride,
            data,
        }
    }

    /// Parses the `'0'/'1'` row dump written by `Display`.
    pub fn from_rows_text(text: &str) -> Option<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let cols = lines.first().map_or(0, |l| l.len());
        let mut m = Self::zeros(lines.len(), cols);
        for (r, line) in lines.iter().enumerate() {
            if line.len() != cols {
                return None;
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    _ => return None,
                }
            }
        }
        Some(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        bits::contains(self.col(c), r)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let col = self.col_mut(c);
        if value {
            bits::insert(col, r);
        } else {
            bits::remove(col, r);
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        let v = self.get(r, c);
        self.set(r, c, !v);
    }

    #[inline]
    pub fn col(&self, c: usize) -> &[u64] {
        &self.data[c * self.stride..(c + 1) * self.stride]
    }

    #[inline]
    pub fn col_mut(&mut self, c: usize) -> &mut [u64] {
        &mut self.data[c * self.stride..(c + 1) * self.stride]
    }

    /// Row indices of the nonzero entries of column `c`.
    pub fn col_support(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.col(c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Rank by column reduction on a scratch copy.
    ///
    /// Columns are reduced left to right; each nonzero reduced column is
    /// registered under its lowest set row, and later columns with the same
    /// lowest row are cleared against it.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let stride = self.stride;
        let mut work = self.data.clone();
        let mut pivot_col = vec![u32::MAX; self.rows];
        let mut rank = 0;
        for c in 0..self.cols {
            let (done, rest) = work.split_at_mut(c * stride);
            let col = &mut rest[..stride];
            let mut first = 0;
            loop {
                while first < stride && col[first] == 0 {
                    first += 1;
                }
                if first == stride {
                    break;
                }
                let low = first * 64 + col[first].trailing_zeros() as usize;
                match pivot_col[low] {
                    u32::MAX => {
                        pivot_col[low] = c as u32;
                        rank += 1;
                        break;
                    }
                    p => {
                        let p = p as usize * stride;
                        let pivot = &done[p..p + stride];
                        for (a, b) in col[first..].iter_mut().zip(&pivot[first..]) {
                            *a ^= b;
                        }
                    }
                }
            }
        }
        rank
    }

    /// `self * other`, or `None` on a shape mismatch.
    pub fn mul(&self, other: &BitMatrix) -> Option<BitMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            let (dst_start, stride) = (j * out.stride, out.stride);
            for k in other.col_support(j) {
                let src = self.col(k);
                for (a, b) in out.data[dst_start..dst_start + stride].iter_mut().zip(src) {
                    *a ^= b;
                }
            }
        }
        Some(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_columns(self.cols, (0..self.rows).map(|r| (0..self.cols).filter(move |&c| self.get(r, c))))
    }

    /// Matrix of the permutation sending basis vector `i` to `perm[i]`.
    pub fn permutation(perm: &[usize]) -> BitMatrix {
        BitMatrix::from_columns(perm.len(), perm.iter().map(|&p| [p]))
    }

    pub fn add(&self, other: &BitMatrix) -> Option<BitMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Some(out)
    }
}

/// One row per line of `'0'`/`'1'` characters.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: String = (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Rank of `m`; the input is never modified.
pub fn gf2_rank(m: &BitMatrix) -> usize {
    m.rank()
}
