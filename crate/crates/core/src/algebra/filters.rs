//! Filters, ideals and ultrafilters, stored extensionally.

use alloc::vec::Vec;

use super::boolean::{atoms, FinBoolAlg};
use super::lattice::FinLattice;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Carriers above this size are refused by the subset-scanning oracles.
pub const BRUTE_FORCE_CARRIER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter {
    pub members: Bits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    pub members: Bits,
}

/// A maximal proper filter of a Boolean algebra together with its least
/// element (an atom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UltraFilter {
    generator: usize,
    members: Bits,
}

impl Filter {
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

impl Ideal {
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

impl UltraFilter {
    #[inline]
    pub fn generator(&self) -> usize {
        self.generator
    }

    #[inline]
    pub fn members(&self) -> Bits {
        self.members
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn as_filter(&self) -> Filter {
        Filter {
            members: self.members,
        }
    }
}

pub fn is_filter(l: &FinLattice, s: Bits) -> bool {
    if !s.contains(l.top()) || l.poset().up_closure(s) != s {
        return false;
    }
    s.iter().all(|a| s.iter().all(|b| s.contains(l.meet(a, b))))
}

pub fn is_ideal(l: &FinLattice, s: Bits) -> bool {
    if !s.contains(l.bottom()) || l.poset().down_closure(s) != s {
        return false;
    }
    s.iter().all(|a| s.iter().all(|b| s.contains(l.join(a, b))))
}

/// Every filter of a finite lattice, sorted by member set. In a finite
/// lattice these are exactly the principal up-sets.
pub fn all_filters(l: &FinLattice) -> Vec<Filter> {
    let mut out: Vec<Filter> = (0..l.size())
        .map(|x| Filter {
            members: l.poset().up(x),
        })
        .collect();
    out.sort();
    out
}

pub fn all_ideals(l: &FinLattice) -> Vec<Ideal> {
    let mut out: Vec<Ideal> = (0..l.size())
        .map(|x| Ideal {
            members: l.poset().down(x),
        })
        .collect();
    out.sort();
    out
}

fn brute_force_guard(l: &FinLattice) -> Result<()> {
    if l.size() > BRUTE_FORCE_CARRIER {
        return Err(Error::BoundExceeded {
            what: "brute-force carrier",
            limit: BRUTE_FORCE_CARRIER,
            got: l.size(),
        });
    }
    Ok(())
}

/// Every subset of the carrier that satisfies the filter axioms.
pub fn filters_brute_force(l: &FinLattice) -> Result<Vec<Filter>> {
    brute_force_guard(l)?;
    Ok(Bits::subsets_of(l.size())
        .filter(|&s| is_filter(l, s))
        .map(|members| Filter { members })
        .collect())
}

pub fn ideals_brute_force(l: &FinLattice) -> Result<Vec<Ideal>> {
    brute_force_guard(l)?;
    Ok(Bits::subsets_of(l.size())
        .filter(|&s| is_ideal(l, s))
        .map(|members| Ideal { members })
        .collect())
}

/// Ultrafilters as principal up-sets of atoms, ordered by atom mask.
pub fn ultrafilters(b: &FinBoolAlg) -> Result<Vec<UltraFilter>> {
    if b.is_degenerate() {
        return Err(Error::DegenerateAlgebra);
    }
    Ok(atoms(b)
        .iter()
        .map(|a| UltraFilter {
            generator: a,
            members: b.lattice().poset().up(a),
        })
        .collect())
}

/// Proper filters not strictly contained in another proper filter, found by
/// scanning all subsets. Sorted by member set.
pub fn ultrafilters_brute_force(b: &FinBoolAlg) -> Result<Vec<Filter>> {
    if b.is_degenerate() {
        return Err(Error::DegenerateAlgebra);
    }
    let bottom = b.bottom();
    let proper: Vec<Filter> = filters_brute_force(b.lattice())?
        .into_iter()
        .filter(|f| !f.contains(bottom))
        .collect();
    let mut out: Vec<Filter> = proper
        .iter()
        .filter(|f| {
            !proper
                .iter()
                .any(|g| g.members != f.members && f.members.is_subset(g.members))
        })
        .copied()
        .collect();
    out.sort();
    Ok(out)
}

/// Reconstructs an ultrafilter from its member set, checking it is one.
pub fn ultrafilter_from_members(b: &FinBoolAlg, members: Bits) -> Option<UltraFilter> {
    let l = b.lattice();
    if members.contains(b.bottom()) || !is_filter(l, members) {
        return None;
    }
    let generator = l.meet_all(members);
    let is_atom = atoms(b).contains(generator);
    (is_atom && l.poset().up(generator) == members).then_some(UltraFilter { generator, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::boolean::powerset_algebra;
    use crate::algebra::lattice::FinLattice;

    #[test]
    fn two_element_filters() {
        let b = powerset_algebra(1).unwrap();
        let f: Vec<Bits> = all_filters(b.lattice()).iter().map(|f| f.members).collect();
        assert_eq!(f, [Bits(0b10), Bits(0b11)]);
        assert_eq!(filters_brute_force(b.lattice()).unwrap().len(), 2);
        assert_eq!(all_ideals(b.lattice()).len(), 2);
        assert_eq!(ideals_brute_force(b.lattice()).unwrap().len(), 2);
    }

    #[test]
    fn four_element_counts() {
        let b = powerset_algebra(2).unwrap();
        assert_eq!(filters_brute_force(b.lattice()).unwrap().len(), 4);
        assert_eq!(ideals_brute_force(b.lattice()).unwrap().len(), 4);
        assert_eq!(
            all_filters(b.lattice()),
            filters_brute_force(b.lattice()).unwrap()
        );
        assert_eq!(
            all_ideals(b.lattice()),
            ideals_brute_force(b.lattice()).unwrap()
        );
    }

    #[test]
    fn one_element_lattice() {
        let l = FinLattice::chain(1).unwrap();
        assert_eq!(all_filters(&l).len(), 1);
        assert_eq!(filters_brute_force(&l).unwrap().len(), 1);
        assert_eq!(all_ideals(&l).len(), 1);
        assert_eq!(ideals_brute_force(&l).unwrap().len(), 1);
    }

    #[test]
    fn ultrafilter_examples() {
        let two = powerset_algebra(1).unwrap();
        let u = ultrafilters(&two).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].members(), Bits::singleton(1));

        for (n, expect) in [(2, 2), (3, 3)] {
            let b = powerset_algebra(n).unwrap();
            let fast: Vec<Bits> = ultrafilters(&b)
                .unwrap()
                .iter()
                .map(|u| u.members())
                .collect();
            let slow: Vec<Bits> = ultrafilters_brute_force(&b)
                .unwrap()
                .iter()
                .map(|f| f.members)
                .collect();
            assert_eq!(fast.len(), expect);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn degenerate_has_no_ultrafilters() {
        let b = powerset_algebra(0).unwrap();
        assert_eq!(ultrafilters(&b), Err(Error::DegenerateAlgebra));
    }

    #[test]
    fn brute_force_bound() {
        let b = powerset_algebra(5).unwrap();
        assert!(matches!(
            filters_brute_force(b.lattice()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn members_round_trip() {
        let b = powerset_algebra(3).unwrap();
        for u in ultrafilters(&b).unwrap() {
            assert_eq!(ultrafilter_from_members(&b, u.members()), Some(u));
        }
        assert_eq!(ultrafilter_from_members(&b, b.lattice().carrier()), None);
        assert_eq!(ultrafilter_from_members(&b, Bits::singleton(7)), None);
    }
}
