use alloc::sync::Arc;
use alloc::vec::Vec;

use super::boolean::FinBoolAlg;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Atom bound for [`all_homs`].
pub const MAX_HOM_ATOMS: usize = 4;

/// An order-preserving map between two algebras' carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Arc<FinBoolAlg>,
    target: Arc<FinBoolAlg>,
    table: Vec<usize>,
}

/// A map preserving meet, join, complement and both bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolHom {
    map: MonotoneMap,
}

fn check_total(source: &FinBoolAlg, target: &FinBoolAlg, table: &[usize]) -> Result<()> {
    if table.len() != source.size() {
        return Err(Error::NotTotal {
            expected: source.size(),
            got: table.len(),
        });
    }
    if let Some((element, &image)) = table.iter().enumerate().find(|(_, &t)| t >= target.size()) {
        return Err(Error::OutOfRange { element, image });
    }
    Ok(())
}

impl MonotoneMap {
    pub fn new(
        source: Arc<FinBoolAlg>,
        target: Arc<FinBoolAlg>,
        table: Vec<usize>,
    ) -> Result<Self> {
        check_total(&source, &target, &table)?;
        let n = source.size();
        for a in 0..n {
            for b in source.lattice().poset().up(a) {
                if !target.leq(table[a], table[b]) {
                    return Err(Error::NotMonotone { a, b });
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            table,
        })
    }

    #[inline]
    pub fn source(&self) -> &Arc<FinBoolAlg> {
        &self.source
    }

    #[inline]
    pub fn target(&self) -> &Arc<FinBoolAlg> {
        &self.target
    }

    #[inline]
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// Revalidates as a Boolean homomorphism.
    pub fn to_hom(&self) -> Result<BoolHom> {
        validate_hom(self.table.clone(), self.source.clone(), self.target.clone())
    }
}

/// Checks every operation on every input and returns the first violation.
/// Bounds are checked first, then binary meets, binary joins, complements.
pub fn validate_hom(
    table: Vec<usize>,
    source: Arc<FinBoolAlg>,
    target: Arc<FinBoolAlg>,
) -> Result<BoolHom> {
    check_total(&source, &target, &table)?;
    let (s, t) = (&*source, &*target);
    for (element, expected) in [(s.bottom(), t.bottom()), (s.top(), t.top())] {
        if table[element] != expected {
            return Err(Error::NotBoundPreserving { element });
        }
    }
    let n = s.size();
    for a in 0..n {
        for b in 0..n {
            if table[s.meet(a, b)] != t.meet(table[a], table[b]) {
                return Err(Error::NotMeetPreserving { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if table[s.join(a, b)] != t.join(table[a], table[b]) {
                return Err(Error::NotJoinPreserving { a, b });
            }
        }
    }
    for element in 0..n {
        if table[s.complement(element)] != t.complement(table[element]) {
            return Err(Error::NotComplementPreserving { element });
        }
    }
    // A hom is monotone; construct directly to avoid a second pass.
    Ok(BoolHom {
        map: MonotoneMap {
            source,
            target,
            table,
        },
    })
}

impl BoolHom {
    pub fn identity(b: Arc<FinBoolAlg>) -> BoolHom {
        let table = (0..b.size()).collect();
        BoolHom {
            map: MonotoneMap {
                source: b.clone(),
                target: b,
                table,
            },
        }
    }

    #[inline]
    pub fn as_monotone(&self) -> &MonotoneMap {
        &self.map
    }

    #[inline]
    pub fn source(&self) -> &Arc<FinBoolAlg> {
        &self.map.source
    }

    #[inline]
    pub fn target(&self) -> &Arc<FinBoolAlg> {
        &self.map.target
    }

    #[inline]
    pub fn table(&self) -> &[usize] {
        &self.map.table
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map.table[a]
    }

    pub fn is_injective(&self) -> bool {
        Bits::from_iter(self.table().iter().copied()).len() == self.table().len()
    }

    pub fn is_surjective(&self) -> bool {
        Bits::from_iter(self.table().iter().copied()) == Bits::full(self.target().size())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &BoolHom) -> Result<BoolHom> {
        if self.target() != next.source() {
            return Err(Error::Inconsistent("composed homomorphisms do not meet"));
        }
        let table = self.table().iter().map(|&x| next.apply(x)).collect();
        validate_hom(table, self.source().clone(), next.target().clone())
    }
}

/// The homomorphism whose dual sends the `t`-th atom of `target` to the
/// `atom_map[t]`-th atom of `source`: `h(a)` is the join of those target
/// atoms `t` with `atom_map[t]` below `a`.
pub fn hom_from_atom_map(
    source: Arc<FinBoolAlg>,
    target: Arc<FinBoolAlg>,
    atom_map: &[usize],
) -> Result<BoolHom> {
    if atom_map.len() != target.atom_count() {
        return Err(Error::NotTotal {
            expected: target.atom_count(),
            got: atom_map.len(),
        });
    }
    if let Some((element, &image)) = atom_map
        .iter()
        .enumerate()
        .find(|(_, &s)| s >= source.atom_count())
    {
        return Err(Error::OutOfRange { element, image });
    }
    let table = (0..source.size())
        .map(|a| {
            let below = source.atom_mask(a);
            let mask = atom_map
                .iter()
                .enumerate()
                .filter(|&(_, &s)| below >> s & 1 == 1)
                .fold(0u32, |m, (t, _)| m | 1 << t);
            target.from_atom_mask(mask)
        })
        .collect();
    validate_hom(table, source, target)
}

/// Every homomorphism `source -> target`, found by choosing an image for
/// each atom of `source`, extending by joins and validating the full table.
/// Sorted by table.
pub fn all_homs(source: &Arc<FinBoolAlg>, target: &Arc<FinBoolAlg>) -> Result<Vec<BoolHom>> {
    for b in [source, target] {
        if b.atom_count() > MAX_HOM_ATOMS {
            return Err(Error::BoundExceeded {
                what: "atom count for homomorphism enumeration",
                limit: MAX_HOM_ATOMS,
                got: b.atom_count(),
            });
        }
    }
    let k = source.atom_count();
    let m = target.size();
    let mut out = Vec::new();
    let mut images = alloc::vec![0usize; k];
    loop {
        let table = (0..source.size())
            .map(|a| {
                (0..k)
                    .filter(|&i| source.leq(source.atom(i), a))
                    .fold(target.bottom(), |acc, i| target.join(acc, images[i]))
            })
            .collect();
        if let Ok(h) = validate_hom(table, source.clone(), target.clone()) {
            out.push(h);
        }
        // odometer
        let mut i = 0;
        while i < k {
            images[i] += 1;
            if images[i] < m {
                break;
            }
            images[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out.sort_by(|a, b| a.table().cmp(b.table()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::boolean::powerset_algebra;

    fn p(n: usize) -> Arc<FinBoolAlg> {
        Arc::new(powerset_algebra(n).unwrap())
    }

    #[test]
    fn identity_is_valid() {
        let b = p(2);
        assert!(validate_hom((0..4).collect(), b.clone(), b).is_ok());
    }

    #[test]
    fn constant_top_rejected() {
        let b = p(2);
        let err = validate_hom(alloc::vec![3; 4], b.clone(), b).unwrap_err();
        assert_eq!(err, Error::NotBoundPreserving { element: 0 });
    }

    #[test]
    fn preimage_of_inclusion() {
        // {x} -> {x, y}; preimage sends S to S ∩ {x}
        let table = alloc::vec![0, 1, 0, 1];
        assert!(validate_hom(table, p(2), p(1)).is_ok());
    }

    #[test]
    fn meet_violation_witness() {
        // bounds kept; h({0} ∧ {1}) = {} but h({0}) ∧ h({1}) = {0}
        let table = alloc::vec![0, 1, 3, 3];
        let err = validate_hom(table, p(2), p(2)).unwrap_err();
        assert_eq!(err, Error::NotMeetPreserving { a: 1, b: 2 });
    }

    #[test]
    fn hom_counts() {
        assert_eq!(all_homs(&p(1), &p(1)).unwrap().len(), 1);
        assert_eq!(all_homs(&p(2), &p(1)).unwrap().len(), 2);
        assert_eq!(all_homs(&p(1), &p(2)).unwrap().len(), 1);
        assert_eq!(all_homs(&p(0), &p(1)).unwrap().len(), 0);
        assert_eq!(all_homs(&p(0), &p(0)).unwrap().len(), 1);
        assert!(matches!(
            all_homs(&p(5), &p(1)),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn atom_map_expansion() {
        // both target atoms pulled back to source atom 0
        let h = hom_from_atom_map(p(1), p(2), &[0, 0]).unwrap();
        assert_eq!(h.table(), [0, 3]);
        let swap = hom_from_atom_map(p(2), p(2), &[1, 0]).unwrap();
        assert_eq!(swap.table(), [0, 2, 1, 3]);
    }

    #[test]
    fn monotone_non_hom() {
        let m = MonotoneMap::new(p(2), p(2), alloc::vec![0, 0, 0, 3]).unwrap();
        assert!(m.to_hom().is_err());
        assert!(matches!(
            MonotoneMap::new(p(1), p(1), alloc::vec![1, 0]),
            Err(Error::NotMonotone { a: 0, b: 1 })
        ));
    }
}
