//! Fixed-capacity bitsets backing adjacency rows.
//!
//! Every neighborhood test the library performs is a set operation on rows,
//! so the representation is a plain `Vec<u64>` with the usual word-parallel
//! operators and nothing clever.

use std::fmt;

const BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(BITS)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Capacity in bits, not the number of set bits.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / BITS] |= 1 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / BITS] &= !(1 << (i % BITS));
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & b)
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Complement within the fixed capacity.
    pub fn complement(&self) -> BitSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        Self::mask_tail(self.len, &mut words);
        BitSet { len: self.len, words }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.len, other.len, "capacity mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        assert_eq!(self.len, other.len, "capacity mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * BITS + b)
                }
            })
        })
    }

    fn zip_with(&self, other: &BitSet, f: impl Fn(u64, u64) -> u64) -> BitSet {
        assert_eq!(self.len, other.len, "capacity mismatch");
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Self::mask_tail(self.len, &mut words);
        BitSet { len: self.len, words }
    }

    fn mask_tail(len: usize, words: &mut [u64]) {
        if !len.is_multiple_of(BITS) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % BITS)) - 1;
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    /// Capacity becomes one past the largest element.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let len = items.iter().max().map_or(0, |m| m + 1);
        BitSet::from_indices(len, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(0) && s.contains(64) && s.contains(129));
        assert_eq!(s.count(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices(10, [1, 3, 5, 7]);
        let b = BitSet::from_indices(10, [3, 4, 5]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3, 5]);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 7]);
        assert_eq!(
            a.symmetric_difference(&b).iter().collect::<Vec<_>>(),
            vec![1, 4, 7]
        );
        assert!(BitSet::from_indices(10, [3, 5]).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn complement_respects_capacity() {
        let a = BitSet::from_indices(67, [0, 66]);
        let c = a.complement();
        assert_eq!(c.count(), 65);
        assert!(!c.contains(0) && !c.contains(66));
        assert!(c.contains(1) && c.contains(65));
        assert_eq!(c.complement(), a);
    }
}
