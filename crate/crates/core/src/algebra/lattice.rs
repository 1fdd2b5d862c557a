use alloc::vec::Vec;

use super::poset::FinPoset;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// A finite lattice with precomputed meet and join tables.
///
/// Finite lattices are complete, so [`FinLattice::meet_all`] and
/// [`FinLattice::join_all`] are total (the empty meet is `top`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinLattice {
    poset: FinPoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FinLattice {
    pub fn from_poset(poset: FinPoset) -> Result<Self> {
        let n = poset.size();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut meet = alloc::vec![0; n * n];
        let mut join = alloc::vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = poset.down(a) & poset.down(b);
                let glb = lower
                    .iter()
                    .find(|&g| lower.is_subset(poset.down(g)))
                    .ok_or(Error::NotALattice {
                        a,
                        b,
                        missing: "meet",
                    })?;
                let upper = poset.up(a) & poset.up(b);
                let lub = upper.iter().find(|&l| upper.is_subset(poset.up(l))).ok_or(
                    Error::NotALattice {
                        a,
                        b,
                        missing: "join",
                    },
                )?;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
            }
        }
        let all = Bits::full(n);
        let bottom = (0..n)
            .find(|&x| poset.up(x) == all)
            .ok_or(Error::Invariant("finite lattice without bottom"))?;
        let top = (0..n)
            .find(|&x| poset.down(x) == all)
            .ok_or(Error::Invariant("finite lattice without top"))?;
        Ok(FinLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The subsets of an `n`-element set under inclusion; element `i` is the
    /// subset whose bitmask is `i`.
    pub fn powerset(n: usize) -> Result<Self> {
        if n > 6 {
            return Err(Error::BoundExceeded {
                what: "powerset lattice points",
                limit: 6,
                got: n,
            });
        }
        let size = 1usize << n;
        let poset = FinPoset::from_fn(size, |a, b| a & !b == 0)?;
        let meet = (0..size * size).map(|k| (k / size) & (k % size)).collect();
        let join = (0..size * size).map(|k| (k / size) | (k % size)).collect();
        Ok(FinLattice {
            poset,
            meet,
            join,
            bottom: 0,
            top: size - 1,
        })
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::from_poset(FinPoset::from_fn(n, |a, b| a <= b)?)
    }

    /// Same lattice with element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        if perm.len() != n || Bits::from_iter(perm.iter().copied()) != Bits::full(n) {
            return Err(Error::Inconsistent("relabeling is not a permutation"));
        }
        let mut inv = alloc::vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Self::from_poset(FinPoset::from_fn(n, |a, b| self.leq(inv[a], inv[b]))?)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.poset.size()
    }

    #[inline]
    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet_all(&self, s: Bits) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, s: Bits) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn carrier(&self) -> Bits {
        Bits::full(self.size())
    }

    /// First triple violating `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bottom 0, atoms 1..=3, top 4.
    pub(crate) fn diamond_m3() -> FinLattice {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
        FinLattice::from_poset(FinPoset::from_pairs(5, &pairs).unwrap()).unwrap()
    }

    #[test]
    fn powerset_tables() {
        let l = FinLattice::powerset(3).unwrap();
        assert_eq!(l.size(), 8);
        assert_eq!(l.meet(0b110, 0b011), 0b010);
        assert_eq!(l.join(0b100, 0b001), 0b101);
        assert_eq!((l.bottom(), l.top()), (0, 7));
        assert_eq!(l.meet_all(Bits::EMPTY), 7);
        assert_eq!(l.join_all(Bits::EMPTY), 0);
        assert!(l.distributivity_witness().is_none());
    }

    #[test]
    fn powerset_matches_generic_construction() {
        let fast = FinLattice::powerset(3).unwrap();
        let slow = FinLattice::from_poset(fast.poset().clone()).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn m3_is_not_distributive() {
        let m3 = diamond_m3();
        assert!(m3.distributivity_witness().is_some());
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        let p = FinPoset::from_pairs(2, &[]).unwrap();
        assert!(matches!(
            FinLattice::from_poset(p),
            Err(Error::NotALattice { a: 0, b: 1, .. })
        ));
    }

    #[test]
    fn relabel_reverses_chain() {
        let c = FinLattice::chain(3).unwrap();
        let r = c.relabel(&[2, 1, 0]).unwrap();
        assert_eq!((r.bottom(), r.top()), (2, 0));
        assert!(r.leq(1, 0));
    }
}
