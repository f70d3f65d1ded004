//! Bitsets over the element indices of a finite structure.

use std::cmp::Ordering;
use std::fmt;

use crate::Elem;

/// A subset of `{0, .., len-1}` stored as packed 64-bit words.
///
/// Halos, ideals, submodules and cosets are all represented this way. Two
/// masks are only comparable when they belong to the same structure, which
/// is why the length is part of the value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    len: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(len: usize) -> Self {
        SubsetMask {
            len,
            words: vec![0; len.div_ceil(64).max(1)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Self::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn singleton(len: usize, x: Elem) -> Self {
        let mut m = Self::empty(len);
        m.insert(x);
        m
    }

    pub fn from_elems(len: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut m = Self::empty(len);
        for x in elems {
            m.insert(x);
        }
        m
    }

    pub fn from_predicate(len: usize, mut pred: impl FnMut(Elem) -> bool) -> Self {
        Self::from_elems(len, (0..len).filter(|&x| pred(x)))
    }

    /// Size of the owning structure, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, x: Elem) {
        assert!(
            x < self.len,
            "element {x} outside mask of length {}",
            self.len
        );
        self.words[x / 64] |= 1 << (x % 64);
    }

    pub fn remove(&mut self, x: Elem) {
        assert!(x < self.len);
        self.words[x / 64] &= !(1 << (x % 64));
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.len && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn elems(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Elem> {
        self.iter().next()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.len, other.len, "masks over different structures");
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        SubsetMask {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        SubsetMask {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Image of the mask under an element map into a structure of size `target_len`.
    pub fn map(&self, f: &[Elem], target_len: usize) -> Self {
        Self::from_elems(target_len, self.iter().map(|x| f[x]))
    }

    /// Preimage under an element map from a structure of size `f.len()`.
    pub fn preimage(&self, f: &[Elem]) -> Self {
        Self::from_predicate(f.len(), |x| self.contains(f[x]))
    }
}

/// Masks sort by size first, then lexicographically by their sorted member lists.
impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then(self.count().cmp(&other.count()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ordering_is_size_then_lexicographic() {
        let a = SubsetMask::from_elems(4, [0, 3]);
        let b = SubsetMask::from_elems(4, [0, 1]);
        let c = SubsetMask::from_elems(4, [0]);
        let mut v = vec![a.clone(), b.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, b, a]);
    }

    #[test]
    fn wide_masks() {
        let mut m = SubsetMask::empty(130);
        m.insert(0);
        m.insert(64);
        m.insert(129);
        assert_eq!(m.elems(), vec![0, 64, 129]);
        assert_eq!(m.count(), 3);
        assert!(!m.contains(128));
    }

    proptest! {
        #[test]
        fn set_algebra(xs in proptest::collection::vec(0usize..100, 0..40),
                       ys in proptest::collection::vec(0usize..100, 0..40)) {
            let a = SubsetMask::from_elems(100, xs.iter().copied());
            let b = SubsetMask::from_elems(100, ys.iter().copied());
            let i = a.intersection(&b);
            let u = a.union(&b);
            prop_assert!(i.is_subset(&a) && i.is_subset(&b));
            prop_assert!(a.is_subset(&u) && b.is_subset(&u));
            prop_assert_eq!(i.count() + u.count(), a.count() + b.count());
        }
    }
}
