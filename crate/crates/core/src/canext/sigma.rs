use alloc::vec::Vec;

use crate::algebra::{all_filters, MonotoneMap};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::stone::phi_table;

/// `h^σ : P(Uf(B1)) -> P(Uf(B2))`, indexed by the bitmask of the argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaExtension {
    source_points: usize,
    target_points: usize,
    table: Vec<Bits>,
}

impl SigmaExtension {
    pub fn apply(&self, a: Bits) -> Bits {
        self.table[a.0 as usize]
    }

    pub fn table(&self) -> &[Bits] {
        &self.table
    }

    pub fn source_points(&self) -> usize {
        self.source_points
    }

    pub fn target_points(&self) -> usize {
        self.target_points
    }
}

/// Computes, for every `A ⊆ Uf(B1)`,
///
/// ```text
/// h^σ(A) = ⋃ { ⋂ { φ2(h(a)) : a ∈ F } : F ∈ Fi(B1), ⋂ φ1[F] ⊆ A }
/// ```
///
/// quantifying over the extensional filter list. The result is checked to
/// be monotone and to agree with `φ2 ∘ h` on the image of `φ1`.
pub fn sigma_extend(h: &MonotoneMap) -> Result<SigmaExtension> {
    let (b1, b2) = (h.source(), h.target());
    let phi1 = phi_table(b1)?;
    let phi2 = phi_table(b2)?;
    let n1 = b1.atom_count();
    let n2 = b2.atom_count();
    let all1 = Bits::full(n1);
    let all2 = Bits::full(n2);

    // (⋂φ1[F], ⋂φ2[h[F]]) per filter
    let contributions: Vec<(Bits, Bits)> = all_filters(b1.lattice())
        .iter()
        .map(|f| {
            let lower = f.members.iter().fold(all1, |acc, a| acc & phi1[a]);
            let image = f.members.iter().fold(all2, |acc, a| acc & phi2[h.apply(a)]);
            (lower, image)
        })
        .collect();

    let table: Vec<Bits> = Bits::subsets_of(n1)
        .map(|a| {
            contributions
                .iter()
                .filter(|(lower, _)| lower.is_subset(a))
                .fold(Bits::EMPTY, |acc, &(_, image)| acc | image)
        })
        .collect();

    for a in Bits::subsets_of(n1) {
        for b in Bits::subsets_of(n1).filter(|&b| a.is_subset(b)) {
            if !table[a.0 as usize].is_subset(table[b.0 as usize]) {
                return Err(Error::Invariant("σ-extension is not monotone"));
            }
        }
    }
    for a in 0..b1.size() {
        if table[phi1[a].0 as usize] != phi2[h.apply(a)] {
            return Err(Error::Invariant("σ-extension does not extend the map"));
        }
    }
    Ok(SigmaExtension {
        source_points: n1,
        target_points: n2,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hom_from_atom_map, powerset_algebra, BoolHom, FinBoolAlg};
    use alloc::sync::Arc;

    fn p(n: usize) -> Arc<FinBoolAlg> {
        Arc::new(powerset_algebra(n).unwrap())
    }

    #[test]
    fn identity_on_two() {
        let id = BoolHom::identity(p(1));
        let s = sigma_extend(id.as_monotone()).unwrap();
        assert_eq!(s.table(), [Bits(0), Bits(1)]);
    }

    #[test]
    fn selecting_atom_zero() {
        let h = hom_from_atom_map(p(2), p(1), &[0]).unwrap();
        let s = sigma_extend(h.as_monotone()).unwrap();
        // {v} iff u_{atom0} ∈ A
        assert_eq!(s.table(), [Bits(0), Bits(1), Bits(0), Bits(1)]);
    }

    #[test]
    fn empty_set_maps_to_empty() {
        let h = hom_from_atom_map(p(3), p(2), &[2, 0]).unwrap();
        assert_eq!(
            sigma_extend(h.as_monotone()).unwrap().apply(Bits::EMPTY),
            Bits::EMPTY
        );
    }

    #[test]
    fn degenerate_rejected() {
        let id = BoolHom::identity(p(0));
        assert_eq!(
            sigma_extend(id.as_monotone()),
            Err(Error::DegenerateAlgebra)
        );
    }
}
