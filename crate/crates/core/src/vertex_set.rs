//! Dense bit-indexed vertex subsets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

const BITS: usize = 64;

/// A subset of `{0, .., universe - 1}`.
///
/// Iteration is always in ascending vertex order. The total order compares
/// the ascending member sequences lexicographically, so `{0, 2} < {0, 2, 3}
/// < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    /// Builds a set, rejecting out-of-range members.
    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(v);
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v / BITS, v % BITS);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / BITS, v % BITS);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / BITS] & (1 << (v % BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.zip_with(self, |a, _| !a);
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let tail = self.universe % BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        self.union(rhs)
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        self.intersection(rhs)
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        self.difference(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(universe: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(universe, vs.iter().copied()).unwrap()
    }

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert!(s.insert(69));
        assert_eq!(s.to_vec(), vec![3, 69]);
        assert_eq!(s.len(), 2);
        assert!(s.remove(3));
        assert!(!s.contains(3));
        assert!(VertexSet::from_vertices(4, [4]).is_err());
    }

    #[test]
    fn complement_respects_universe() {
        let s = set(66, &[0, 65]);
        let c = s.complement();
        assert_eq!(c.len(), 64);
        assert!(!c.contains(0) && !c.contains(65) && c.contains(64));
        assert_eq!(VertexSet::empty(0).complement().len(), 0);
    }

    #[test]
    fn lexicographic_order() {
        let a = set(5, &[0, 2]);
        let b = set(5, &[0, 2, 3]);
        let c = set(5, &[1]);
        let e = VertexSet::empty(5);
        assert!(e < a && a < b && b < c);
    }

    fn arb_pair() -> impl Strategy<Value = (VertexSet, VertexSet, VertexSet)> {
        (1usize..130).prop_flat_map(|n| {
            let s = proptest::collection::btree_set(0..n, 0..n.min(40));
            (s.clone(), s.clone(), s).prop_map(move |(a, b, c)| {
                (
                    set(n, &a.into_iter().collect::<Vec<_>>()),
                    set(n, &b.into_iter().collect::<Vec<_>>()),
                    set(n, &c.into_iter().collect::<Vec<_>>()),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn set_laws((a, b, c) in arb_pair()) {
            prop_assert_eq!(&a | &b, &b | &a);
            prop_assert_eq!(&a & &b, &b & &a);
            prop_assert_eq!(&(&a | &b) | &c, &a | &(&b | &c));
            prop_assert_eq!(&a & &(&b | &c), &(&a & &b) | &(&a & &c));
            prop_assert_eq!((&a | &b).complement(), &a.complement() & &b.complement());
            prop_assert_eq!(&a - &b, &a & &b.complement());
            prop_assert_eq!(a.complement().complement(), a.clone());
            prop_assert!((&a & &b).is_subset(&a));
            prop_assert!((&a - &b).is_disjoint(&b));
            prop_assert_eq!((&a | &b).len() + (&a & &b).len(), a.len() + b.len());
            let members = a.to_vec();
            prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
