//! Finite sets over an indexed universe.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::Error;

const WORD: usize = 64;

/// A subset of a finite universe `{0, .., len - 1}`, stored as a bit vector.
///
/// The first 64 members live inline, so sets over universes of up to 64
/// objects never allocate. Two sets are comparable only when they were built
/// over universes of the same size; the binary operators panic otherwise and
/// the `try_*` methods report [`Error::UniverseMismatch`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectSet {
    len: usize,
    head: u64,
    tail: Vec<u64>,
}

impl ObjectSet {
    pub fn empty(len: usize) -> Self {
        let extra = len.saturating_sub(WORD).div_ceil(WORD);
        ObjectSet {
            len,
            head: 0,
            tail: alloc::vec![0; extra],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.head = !0;
        for w in &mut s.tail {
            *w = !0;
        }
        s.trim();
        s
    }

    /// Builds a set from member indices; fails on an index outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, members: I) -> Result<Self, Error> {
        let mut s = Self::empty(len);
        for i in members {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, len });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Builds the set whose characteristic vector is the low `len` bits of `mask`.
    ///
    /// Only available for universes of at most 64 objects.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask needs a universe of at most 64 objects");
        let mut s = ObjectSet {
            len,
            head: mask,
            tail: Vec::new(),
        };
        s.trim();
        s
    }

    /// Characteristic vector as a single word, when the universe fits.
    pub fn as_mask(&self) -> Option<u64> {
        (self.len <= WORD).then_some(self.head)
    }

    /// Size of the universe this set lives in.
    pub fn universe_len(&self) -> usize {
        self.len
    }

    fn word(&self, w: usize) -> u64 {
        if w == 0 {
            self.head
        } else {
            self.tail[w - 1]
        }
    }

    fn word_mut(&mut self, w: usize) -> &mut u64 {
        if w == 0 {
            &mut self.head
        } else {
            &mut self.tail[w - 1]
        }
    }

    fn words(&self) -> usize {
        1 + self.tail.len()
    }

    // Clear bits above `len` in the last word.
    fn trim(&mut self) {
        let last = self.words() - 1;
        let used = self.len - last * WORD;
        if used < WORD {
            let keep = if used == 0 { 0 } else { !0u64 >> (WORD - used) };
            *self.word_mut(last) &= keep;
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.word(i / WORD) >> (i % WORD) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "index {i} outside universe of {}", self.len);
        *self.word_mut(i / WORD) |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "index {i} outside universe of {}", self.len);
        *self.word_mut(i / WORD) &= !(1 << (i % WORD));
    }

    pub fn count(&self) -> usize {
        self.head.count_ones() as usize + self.tail.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.head == 0 && self.tail.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.len)
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.words()).flat_map(move |w| {
            let mut bits = self.word(w);
            core::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD + b)
            })
        })
    }

    pub fn same_universe(&self, other: &Self) -> bool {
        self.len == other.len
    }

    pub fn check_universe(&self, other: &Self) -> Result<(), Error> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.assert_same(other);
        (0..self.words()).all(|w| self.word(w) & !other.word(w) == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.assert_same(other);
        (0..self.words()).any(|w| self.word(w) & other.word(w) != 0)
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        s.head = !s.head;
        for w in &mut s.tail {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn try_union(&self, other: &Self) -> Result<Self, Error> {
        self.check_universe(other)?;
        Ok(self | other)
    }

    pub fn try_intersection(&self, other: &Self) -> Result<Self, Error> {
        self.check_universe(other)?;
        Ok(self & other)
    }

    pub fn try_difference(&self, other: &Self) -> Result<Self, Error> {
        self.check_universe(other)?;
        Ok(self - other)
    }

    fn assert_same(&self, other: &Self) {
        assert!(
            self.same_universe(other),
            "universe mismatch: {} vs {} objects",
            self.len,
            other.len
        );
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.assert_same(other);
        let mut s = self.clone();
        for w in 0..self.words() {
            *s.word_mut(w) = f(self.word(w), other.word(w));
        }
        s
    }
}

/// Every subset of a universe of `len` objects, in increasing characteristic-mask order.
///
/// Requires `len < 64`.
pub fn all_subsets(len: usize) -> impl Iterator<Item = ObjectSet> + Clone {
    assert!(len < WORD, "exhaustive enumeration needs fewer than 64 objects");
    (0..1u64 << len).map(move |m| ObjectSet::from_mask(len, m))
}

impl BitAnd for &ObjectSet {
    type Output = ObjectSet;
    fn bitand(self, rhs: Self) -> ObjectSet {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl BitOr for &ObjectSet {
    type Output = ObjectSet;
    fn bitor(self, rhs: Self) -> ObjectSet {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl Sub for &ObjectSet {
    type Output = ObjectSet;
    fn sub(self, rhs: Self) -> ObjectSet {
        self.zip_with(rhs, |a, b| a & !b)
    }
}

impl Not for &ObjectSet {
    type Output = ObjectSet;
    fn not(self) -> ObjectSet {
        self.complement()
    }
}

impl fmt::Debug for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let s = ObjectSet::from_indices(5, [0, 2]).unwrap();
        assert!(s.contains(0) && s.contains(2) && !s.contains(1));
        assert_eq!(s.count(), 2);
        assert_eq!(s.complement().iter().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(s.complement().complement(), s);
        assert!(ObjectSet::from_indices(5, [5]).is_err());
    }

    #[test]
    fn large_universe_spills() {
        let mut s = ObjectSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.complement().count(), 127);
        assert!(ObjectSet::full(130).is_full());
        assert_eq!(ObjectSet::full(128).count(), 128);
        assert!(s.as_mask().is_none());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = ObjectSet::empty(3);
        let b = ObjectSet::empty(4);
        assert_eq!(a.try_union(&b), Err(Error::UniverseMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn empty_universe() {
        let s = ObjectSet::full(0);
        assert!(s.is_empty() && s.is_full());
        assert_eq!(all_subsets(0).count(), 1);
    }

    proptest! {
        #[test]
        fn de_morgan(len in 1usize..150, a in proptest::collection::vec(any::<usize>(), 0..20),
                     b in proptest::collection::vec(any::<usize>(), 0..20)) {
            let a = ObjectSet::from_indices(len, a.into_iter().map(|i| i % len)).unwrap();
            let b = ObjectSet::from_indices(len, b.into_iter().map(|i| i % len)).unwrap();
            prop_assert_eq!(!&(&a | &b), &!&a & &!&b);
            prop_assert_eq!(&a - &b, &a & &!&b);
            prop_assert!((&a & &b).is_subset(&a));
            prop_assert_eq!((&a | &b).count() + (&a & &b).count(), a.count() + b.count());
        }
    }
}
