//! Helpers for vertex sets packed into `u64` words. Bit `i` lives in word
//! `i / 64` at position `i % 64`.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn contains(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub fn insert(set: &mut [u64], i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

#[inline]
pub fn remove(set: &mut [u64], i: usize) {
    set[i / 64] &= !(1 << (i % 64));
}

#[inline]
pub fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

#[inline]
pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

#[inline]
pub fn intersect_into(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a &= b;
    }
}

/// Iterates the members of `set` in increasing order.
pub fn iter(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(wi, &w)| {
        let mut word = w;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let tz = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(wi * 64 + tz)
        })
    })
}

/// Lowercase hexadecimal, most significant word first, no leading zeros.
pub fn to_hex(set: &[u64]) -> String {
    let mut out = String::new();
    for &w in set.iter().rev() {
        if out.is_empty() {
            if w != 0 {
                out.push_str(&format!("{w:x}"));
            }
        } else {
            out.push_str(&format!("{w:016x}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Inverse of [`to_hex`]; `None` if the text is not hex or does not fit.
pub fn from_hex(text: &str, words: usize) -> Option<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_hexdigit()) {
        return None;
    }
    let mut out = vec![0u64; words];
    let digits = text.as_bytes();
    let chunks: Vec<&[u8]> = digits.rchunks(16).collect();
    for (i, chunk) in chunks.iter().enumerate() {
        let s = std::str::from_utf8(chunk).ok()?;
        let w = u64::from_str_radix(s, 16).ok()?;
        if i >= words {
            if w != 0 {
                return None;
            }
        } else {
            out[i] = w;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterate_across_words() {
        let mut s = vec![0u64; 2];
        for i in [0, 5, 63, 64, 100] {
            insert(&mut s, i);
        }
        assert_eq!(iter(&s).collect::<Vec<_>>(), vec![0, 5, 63, 64, 100]);
        assert_eq!(count(&s), 5);
        remove(&mut s, 63);
        assert!(!contains(&s, 63));
    }

    #[test]
    fn hex_roundtrip() {
        let s = vec![0xdead_beef, 0x1];
        let h = to_hex(&s);
        assert_eq!(h, "100000000deadbeef");
        assert_eq!(from_hex(&h, 2).unwrap(), s);
        assert_eq!(to_hex(&[0, 0]), "0");
        assert_eq!(from_hex("1f", 1).unwrap(), vec![0x1f]);
        assert!(from_hex("zz", 1).is_none());
        assert!(from_hex("100000000deadbeef", 1).is_none());
    }
}
