//! Fixed-width bit rows used for adjacency sets and rank bitmaps.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    (bits[i / WORD_BITS] >> (i % WORD_BITS)) & 1 != 0
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn count(bits: &[u64]) -> u64 {
    bits.iter().map(|w| w.count_ones() as u64).sum()
}

/// Mask for the last word of an `n`-bit row; all-ones when `n` is a
/// multiple of the word size.
#[inline]
pub(crate) fn tail_mask(n: usize) -> u64 {
    let rem = n % WORD_BITS;
    if rem == 0 {
        u64::MAX
    } else {
        (1u64 << rem) - 1
    }
}

/// Writes the all-ones row for `n` bits into `out`.
pub(crate) fn fill_all(out: &mut [u64], n: usize) {
    for w in out.iter_mut() {
        *w = u64::MAX;
    }
    if let Some(last) = out.last_mut() {
        *last &= tail_mask(n);
    }
}

/// Iterates the set bit positions of a word slice in ascending order.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let cur = words.first().copied().unwrap_or(0);
        BitIter { words, idx: 0, cur }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.idx * WORD_BITS + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_test_roundtrip() {
        let mut row = vec![0u64; 3];
        for i in [0, 63, 64, 127, 128, 130] {
            set(&mut row, i);
        }
        let got: Vec<usize> = BitIter::new(&row).collect();
        assert_eq!(got, vec![0, 63, 64, 127, 128, 130]);
        assert_eq!(count(&row), 6);
        assert!(test(&row, 64));
        assert!(!test(&row, 65));
    }

    #[test]
    fn tail_masks() {
        assert_eq!(tail_mask(64), u64::MAX);
        assert_eq!(tail_mask(1), 1);
        assert_eq!(tail_mask(65), 1);
        let mut row = vec![0u64; 2];
        fill_all(&mut row, 65);
        assert_eq!(count(&row), 65);
    }
}
