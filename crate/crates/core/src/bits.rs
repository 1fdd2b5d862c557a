//! Fixed-width subsets of `0..64`.
//!
//! Every finite carrier in this crate is bounded by 64 elements, so element
//! sets, point sets and filters are all a single machine word.

use core::fmt;
use core::ops::{BitAnd, BitOr, Not};

/// Largest carrier a [`Bits`] can index.
pub const CAPACITY: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bits(pub u64);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Bits {
        if n >= CAPACITY {
            Bits(u64::MAX)
        } else {
            Bits((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Bits {
        Bits(1u64 << i)
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < CAPACITY && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub const fn with(self, i: usize) -> Bits {
        Bits(self.0 | 1u64 << i)
    }

    #[inline]
    pub const fn union(self, other: Bits) -> Bits {
        Bits(self.0 | other.0)
    }

    #[inline]
    pub const fn intersect(self, other: Bits) -> Bits {
        Bits(self.0 & other.0)
    }

    #[inline]
    pub const fn minus(self, other: Bits) -> Bits {
        Bits(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Bits {
        Bits(!self.0 & Bits::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Bits) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }

    /// All subsets of `{0, .., n-1}` in ascending numeric order. Requires `n < 64`.
    pub fn subsets_of(n: usize) -> impl Iterator<Item = Bits> + Clone {
        debug_assert!(n < CAPACITY);
        (0..1u64 << n).map(Bits)
    }
}

impl BitAnd for Bits {
    type Output = Bits;
    fn bitand(self, rhs: Bits) -> Bits {
        self.intersect(rhs)
    }
}

impl BitOr for Bits {
    type Output = Bits;
    fn bitor(self, rhs: Bits) -> Bits {
        self.union(rhs)
    }
}

impl Not for Bits {
    type Output = Bits;
    fn not(self) -> Bits {
        Bits(!self.0)
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Bits {
        let mut b = Bits::EMPTY;
        for i in iter {
            b.insert(i);
        }
        b
    }
}

impl IntoIterator for Bits {
    type Item = usize;
    type IntoIter = BitsIter;
    fn into_iter(self) -> BitsIter {
        self.iter()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone)]
pub struct BitsIter(u64);

impl Iterator for BitsIter {
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

impl ExactSizeIterator for BitsIter {}
