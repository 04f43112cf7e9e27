//! Fixed-width element sets over a ground set of at most 128 indexed elements.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of elements any single ground set may carry.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of an indexed ground set, stored as a 128-bit mask.
///
/// The derived `Ord` is numeric on the mask and is only meant for use as a
/// map/set key. Use [`ElemSet::lex_cmp`] for the canonical output order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        ElemSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(ElemSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | 1u128 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u128 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        ElemSet(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest index in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending index sequences.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElemSet::from_indices(iter)
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

/// Carry-rippler enumeration of all submasks.
pub struct Subsets {
    set: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.set) & self.set;
        self.next = (nxt != 0).then_some(nxt);
        Some(ElemSet(cur))
    }
}

/// Sorts a family into canonical lexicographic order and removes duplicates.
pub fn canonical_family(mut family: Vec<ElemSet>) -> Vec<ElemSet> {
    family.sort_by(|a, b| a.lex_cmp(*b));
    family.dedup();
    family
}

/// Keeps only the inclusion-minimal nonempty members of `family`.
pub fn minimal_members(family: impl IntoIterator<Item = ElemSet>) -> Vec<ElemSet> {
    let mut sets: Vec<ElemSet> = family.into_iter().filter(|s| !s.is_empty()).collect();
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    let mut kept: Vec<ElemSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    canonical_family(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_sparse_mask() {
        let s = ElemSet::from_indices([0, 2, 4, 6]);
        let all: Vec<u128> = s.subsets().map(|x| x.bits()).collect();
        assert_eq!(all, vec![0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85]);
    }

    #[test]
    fn empty_set_has_one_subset() {
        assert_eq!(ElemSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn lex_order_prefers_prefixes() {
        let a = ElemSet::from_indices([0]);
        let ab = ElemSet::from_indices([0, 1]);
        let b = ElemSet::from_indices([1]);
        assert_eq!(a.lex_cmp(ab), Ordering::Less);
        assert_eq!(ab.lex_cmp(b), Ordering::Less);
    }

    #[test]
    fn high_bits_work() {
        let s = ElemSet::singleton(127).with(64);
        assert_eq!(s.to_vec(), vec![64, 127]);
        assert_eq!(ElemSet::full(128).len(), 128);
    }

    #[test]
    fn minimal_members_drops_supersets() {
        let fam = vec![
            ElemSet::from_indices([0, 1, 2]),
            ElemSet::from_indices([0, 1]),
            ElemSet::from_indices([2, 3]),
            ElemSet::EMPTY,
        ];
        assert_eq!(
            minimal_members(fam),
            vec![ElemSet::from_indices([0, 1]), ElemSet::from_indices([2, 3])]
        );
    }
}
