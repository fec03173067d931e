//! Fixed-universe vertex sets backed by bit vectors.
//!
//! Every set knows the size `n` of the vertex universe it lives in, so the
//! word-parallel operations (union, intersection, symmetric difference) can
//! assume equal widths. Codes, independent sets, neighbourhoods and the L/R
//! sides of a matching are all `VertexSet`s.

use fixedbitset::FixedBitSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    /// Empty set over a universe of `n` vertices.
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    /// The set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.set_range(.., true);
        VertexSet { bits }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not of the set itself.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.remove(v);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.ones().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe(), other.universe());
        let mut s = self.clone();
        s.bits.symmetric_difference_with(&other.bits);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Number of members shared with `other`, without materialising the
    /// intersection.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection(&other.bits).count()
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on the sorted member lists. Any total order works
    /// for grouping equal neighbourhoods; this one is stable across word
    /// sizes.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.ones().cmp(other.bits.ones())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Builds a set whose universe is just large enough for the largest
    /// member. Prefer `VertexSet::from_iter(n, ..)` when the universe is
    /// known.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let n = items.iter().max().map_or(0, |&v| v + 1);
        VertexSet::from_iter(n, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::new(10);
        assert!(s.is_empty());
        s.insert(3);
        s.insert(7);
        assert!(s.contains(3) && s.contains(7) && !s.contains(4));
        assert_eq!(s.len(), 2);
        s.remove(3);
        assert!(!s.contains(3));
        assert_eq!(s.to_vec(), vec![7]);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter(8, [0, 1, 2, 5]);
        let b = VertexSet::from_iter(8, [2, 3, 5, 7]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3, 5, 7]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 5]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![0, 1, 3, 7]);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(!a.is_disjoint(&b));
        assert!(a.intersection(&b).is_subset(&a));
    }

    #[test]
    fn full_universe() {
        let s = VertexSet::full(5);
        assert_eq!(s.to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(VertexSet::full(0).len(), 0);
    }

    #[test]
    fn order_is_lexicographic_on_members() {
        let a = VertexSet::from_iter(70, [0, 69]);
        let b = VertexSet::from_iter(70, [1]);
        let c = VertexSet::from_iter(70, [0, 69]);
        assert!(a < b);
        assert_eq!(a.cmp(&c), std::cmp::Ordering::Equal);
    }
}
