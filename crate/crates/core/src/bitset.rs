//! Fixed-capacity bit sets backed by `u64` words.
//!
//! Derivation operators on formal contexts reduce to word-wise AND folds
//! over rows and columns, which is the dominant inner loop of concept
//! enumeration, so the representation is kept deliberately flat.

use std::fmt;

/// A set over `0..len` stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    /// The empty set over a universe of `len` elements.
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// The full set over a universe of `len` elements.
    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = BitSet::new(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Universe size (not the number of members).
    pub fn capacity(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range 0..{}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range 0..{}", self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place intersection. Both sets must share a universe.
    pub fn intersect_with(&mut self, other: &BitSet) {
        assert_eq!(self.len, other.len, "universe mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        assert_eq!(self.len, other.len, "universe mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.len, other.len, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    /// True when some member of `self` is missing from `other`, restricted to
    /// elements strictly below `bound`. Used by the lectic-order test.
    pub fn has_extra_below(&self, other: &BitSet, bound: usize) -> bool {
        for i in self.iter() {
            if i >= bound {
                return false;
            }
            if !other.contains(i) {
                return true;
            }
        }
        false
    }

    /// Iterator over member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::BitSet;

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
        assert_eq!(s.to_indices(), vec![0, 129]);
    }

    #[test]
    fn subset_and_intersection() {
        let a = BitSet::from_indices(10, &[1, 3, 5]);
        let b = BitSet::from_indices(10, &[1, 3, 5, 7]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        let mut c = b.clone();
        c.intersect_with(&a);
        assert_eq!(c, a);
    }

    #[test]
    fn extra_below_bound() {
        let a = BitSet::from_indices(8, &[2, 6]);
        let b = BitSet::from_indices(8, &[6]);
        assert!(a.has_extra_below(&b, 5));
        assert!(!a.has_extra_below(&b, 2));
        // 6 is extra but not below the bound
        assert!(!a.has_extra_below(&b, 6));
    }

    #[test]
    fn full_and_empty() {
        let f = BitSet::full(67);
        assert_eq!(f.count(), 67);
        assert!(BitSet::new(5).is_empty());
        assert!(BitSet::new(0).is_empty());
    }
}
