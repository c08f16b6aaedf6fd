//! Fixed-width bit sets over element indices.

use std::cmp::Ordering;
use std::fmt;

/// A membership mask over `0..len` for some ambient length.
///
/// Equality and hashing are by content; two masks built for the same group
/// always have the same word count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mask {
    words: Box<[u64]>,
}

impl Mask {
    pub fn empty(len: usize) -> Self {
        Mask { words: vec![0u64; len.div_ceil(64)].into_boxed_slice() }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Self::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(len);
        for i in indices {
            m.insert(i);
        }
        m
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Returns `true` if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Mask) -> Mask {
        let words = self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect();
        Mask { words }
    }

    pub fn union(&self, other: &Mask) -> Mask {
        let words = self.words.iter().zip(other.words.iter()).map(|(a, b)| a | b).collect();
        Mask { words }
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Lexicographic order on the sorted member lists.
impl Ord for Mask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_iterate_across_words() {
        let m = Mask::from_indices(200, [0, 63, 64, 130, 199]);
        assert_eq!(m.to_vec(), vec![0, 63, 64, 130, 199]);
        assert_eq!(m.count(), 5);
        assert!(m.contains(130));
        assert!(!m.contains(131));
    }

    #[test]
    fn subset_and_set_ops() {
        let a = Mask::from_indices(70, [1, 2, 65]);
        let b = Mask::from_indices(70, [1, 2, 3, 65, 69]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.union(&b), b);
    }

    #[test]
    fn lexicographic_order() {
        let a = Mask::from_indices(8, [0, 1, 5]);
        let b = Mask::from_indices(8, [0, 2, 3]);
        assert!(a < b);
        let c = Mask::from_indices(8, [0, 1]);
        assert!(c < a);
    }
}
