//! Fixed-capacity bit set over 64-bit words, used for vertex sets.
//!
//! The capacity is fixed at construction; all binary operations require both
//! operands to have the same capacity.

use serde::{Deserialize, Serialize, Serializer};

const WORD_BITS: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

/// A set of vertices `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, Deserialize)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    /// Builds a set from explicit members.
    pub fn from_members(n: usize, members: &[usize]) -> Self {
        let mut s = VertexSet::new(n);
        for &v in members {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Number of elements common to `self` and a raw word slice of the same
    /// capacity (used against adjacency rows without allocating).
    pub fn intersection_size_words(&self, row: &[u64]) -> usize {
        debug_assert_eq!(self.words.len(), row.len());
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            IterWord { w, base: wi * WORD_BITS }
        })
    }

    /// Members as a sorted vector (handy for serialization and reports).
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

struct IterWord {
    w: u64,
    base: usize,
}

impl Iterator for IterWord {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.w == 0 {
            return None;
        }
        let t = self.w.trailing_zeros() as usize;
        self.w &= self.w - 1;
        Some(self.base + t)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = VertexSet::new(130);
        assert!(s.is_empty());
        for v in [0, 63, 64, 129] {
            s.insert(v);
        }
        assert_eq!(s.len(), 4);
        assert!(s.contains(63) && s.contains(64));
        assert!(!s.contains(1));
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 63, 129]);
    }

    #[test]
    fn subset_and_union() {
        let a = VertexSet::from_members(10, &[1, 3, 5]);
        let mut b = VertexSet::from_members(10, &[1, 3]);
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        b.union_with(&a);
        assert_eq!(b.to_vec(), vec![1, 3, 5]);
    }
}
