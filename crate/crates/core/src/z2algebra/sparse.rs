//! Column reduction on sparse columns, for boundary maps too large to
//! store densely.

use crate::error::{Error, Result};

/// Rank of the matrix whose columns list their nonzero rows.
///
/// Columns are reduced left to right against earlier pivots keyed by their
/// largest row index. Fails once the stored reduced columns hold more than
/// `entry_limit` entries.
pub fn sparse_rank(rows: usize, columns: impl IntoIterator<Item = Vec<u32>>, entry_limit: usize) -> Result<usize> {
    let mut pivot_of: Vec<u32> = vec![u32::MAX; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    let mut stored = 0usize;
    let mut scratch = Vec::new();
    let mut cols = 0usize;
    for mut col in columns {
        cols += 1;
        col.sort_unstable();
        dedup_pairs(&mut col);
        while let Some(&low) = col.last() {
            match pivot_of[low as usize] {
                u32::MAX => {
                    pivot_of[low as usize] = reduced.len() as u32;
                    stored += col.len();
                    if stored > entry_limit {
                        return Err(Error::MatrixTooLarge { rows, cols });
                    }
                    reduced.push(col);
                    break;
                }
                p => {
                    symmetric_difference(&col, &reduced[p as usize], &mut scratch);
                    std::mem::swap(&mut col, &mut scratch);
                }
            }
        }
    }
    Ok(reduced.len())
}

/// Removes entries that occur an even number of times from a sorted list.
fn dedup_pairs(v: &mut Vec<u32>) {
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(v[i]);
        }
        i = j;
    }
    *v = out;
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z2algebra::BitMatrix;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(sparse_rank(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], usize::MAX).unwrap(), 2);
        assert_eq!(sparse_rank(3, Vec::<Vec<u32>>::new(), usize::MAX).unwrap(), 0);
        assert_eq!(sparse_rank(2, vec![vec![1, 1], vec![0]], usize::MAX).unwrap(), 1);
        assert!(sparse_rank(4, vec![vec![0, 1], vec![2, 3]], 3).is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_dense(cols in proptest::collection::vec(proptest::collection::vec(0u32..40, 0..6), 0..50)) {
            let dense = BitMatrix::from_columns(40, cols.iter().map(|c| c.iter().map(|&r| r as usize)));
            prop_assert_eq!(sparse_rank(40, cols.clone(), usize::MAX).unwrap(), dense.rank());
        }
    }
}
