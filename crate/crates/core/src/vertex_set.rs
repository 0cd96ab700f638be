use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Vertex;

/// A set of vertices drawn from `1..=n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    n: u32,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: u32) -> Self {
        VertexSet {
            n,
            words: vec![0; (n as usize).div_ceil(64)],
        }
    }

    pub fn full(n: u32) -> Self {
        let mut s = Self::empty(n);
        for v in 1..=n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: u32, vertices: I) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Universe size `n`.
    pub fn universe(&self) -> u32 {
        self.n
    }

    #[inline]
    fn slot(v: Vertex) -> (usize, u64) {
        let i = (v - 1) as usize;
        (i / 64, 1u64 << (i % 64))
    }

    /// Panics if `v` is outside `1..=n`.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v >= 1 && v <= self.n, "vertex {v} outside 1..={}", self.n);
        let (w, b) = Self::slot(v);
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        if v == 0 || v > self.n {
            return false;
        }
        let (w, b) = Self::slot(v);
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        if v == 0 || v > self.n {
            return false;
        }
        let (w, b) = Self::slot(v);
        self.words[w] & b != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Vertices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            core::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros();
                bits &= bits - 1;
                Some((wi as u32) * 64 + tz + 1)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(core::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::empty(130);
        assert!(s.is_empty());
        assert!(s.insert(1));
        assert!(s.insert(64));
        assert!(s.insert(65));
        assert!(s.insert(130));
        assert!(!s.insert(130));
        assert_eq!(s.to_vec(), vec![1, 64, 65, 130]);
        assert_eq!(s.len(), 4);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        assert!(!s.contains(0));
        assert!(!s.contains(131));
        let full = VertexSet::full(130);
        assert!(s.is_subset(&full));
        assert_eq!(full.difference(&s).len(), 127);
    }
}
