use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{
    mask_label, validate_boolean_algebra, validate_hom, BoolHom, FinBoolAlg, Presentation,
};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::stone::embedding::{dual_space, phi_table};
use crate::topology::{ContinuousMap, FinSpace};

/// The clopen sets of a Stone space as a Boolean algebra under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClopenAlgebra {
    space_len: usize,
    algebra: Arc<FinBoolAlg>,
    sets: Vec<Bits>,
}

impl ClopenAlgebra {
    pub fn algebra(&self) -> &Arc<FinBoolAlg> {
        &self.algebra
    }

    /// Point set of each element of [`ClopenAlgebra::algebra`].
    pub fn sets(&self) -> &[Bits] {
        &self.sets
    }

    pub fn space_len(&self) -> usize {
        self.space_len
    }

    pub fn index_of(&self, s: Bits) -> Option<usize> {
        self.sets.iter().position(|&c| c == s)
    }
}

/// `X^*`: the clopens of `x`, normalized to a canonical algebra. Elements
/// are labelled by their point sets.
pub fn clopen_algebra<P>(x: &FinSpace<P>) -> Result<ClopenAlgebra> {
    x.check_stone()?;
    let n = x.len();
    let clopens = x.clopens();
    let m = clopens.len();
    let mut leq = Vec::new();
    for (i, &a) in clopens.iter().enumerate() {
        for (j, &b) in clopens.iter().enumerate() {
            if a.is_subset(b) {
                leq.push((i, j));
            }
        }
    }
    let complement = (0..m)
        .map(|i| {
            let c = clopens[i].complement(n);
            let j = clopens
                .iter()
                .position(|&s| s == c)
                .ok_or(Error::Invariant("complement of a clopen set is not clopen"))?;
            Ok((i, j))
        })
        .collect::<Result<_>>()?;
    let pres = Presentation {
        labels: clopens.iter().map(|s| mask_label(s.0 as usize)).collect(),
        leq,
        complement,
    };
    let algebra = validate_boolean_algebra(&pres)?;
    let atoms = atom_sets(&clopens);
    let sets = (0..algebra.size())
        .map(|e| {
            let s = Bits(algebra.atom_mask(e) as u64)
                .iter()
                .fold(Bits::EMPTY, |acc, k| acc | atoms[k]);
            // the atom encoding must agree with the labels carried through normalization
            if algebra.label(e) != mask_label(s.0 as usize) {
                return Err(Error::Invariant(
                    "clopen labels disagree with atom encoding",
                ));
            }
            Ok(s)
        })
        .collect::<Result<_>>()?;
    Ok(ClopenAlgebra {
        space_len: n,
        algebra: Arc::new(algebra),
        sets,
    })
}

/// Minimal nonempty clopens in ascending order, i.e. the atoms in the order
/// canonical normalization assigns them.
fn atom_sets(clopens: &[Bits]) -> Vec<Bits> {
    clopens
        .iter()
        .copied()
        .filter(|c| {
            !c.is_empty()
                && !clopens
                    .iter()
                    .any(|d| !d.is_empty() && d != c && d.is_subset(*c))
        })
        .collect()
}

/// `f^* : Clop(X2) -> Clop(X1)`, `U ↦ f⁻¹[U]`, for `f : X1 -> X2`.
pub fn dual_of_continuous(
    f: &ContinuousMap,
    x1: &ClopenAlgebra,
    x2: &ClopenAlgebra,
) -> Result<BoolHom> {
    if f.source_len() != x1.space_len || f.target_len() != x2.space_len {
        return Err(Error::Inconsistent(
            "map does not run between the given spaces",
        ));
    }
    let table = x2
        .sets
        .iter()
        .map(|&u| {
            x1.index_of(f.preimage(u)).ok_or(Error::Invariant(
                "preimage of a clopen under a continuous map is not clopen",
            ))
        })
        .collect::<Result<_>>()?;
    validate_hom(table, x2.algebra.clone(), x1.algebra.clone())
}

/// Certified isomorphism `B ≅ Clop(B_*)`, `a ↦ φ(a)`.
#[derive(Debug, Clone)]
pub struct StoneIso {
    pub hom: BoolHom,
    pub clopens: ClopenAlgebra,
}

pub fn stone_representation(b: &Arc<FinBoolAlg>) -> Result<StoneIso> {
    let x = dual_space(b)?;
    let clopens = clopen_algebra(&x)?;
    let table = phi_table(b)?
        .into_iter()
        .map(|s| {
            clopens
                .index_of(s)
                .ok_or(Error::Invariant("φ(a) is not clopen"))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = validate_hom(table, b.clone(), clopens.algebra.clone())
        .map_err(|_| Error::Invariant("φ is not a homomorphism onto the clopens"))?;
    if !(hom.is_injective() && hom.is_surjective()) {
        return Err(Error::Invariant("φ is not a bijection onto the clopens"));
    }
    Ok(StoneIso { hom, clopens })
}
