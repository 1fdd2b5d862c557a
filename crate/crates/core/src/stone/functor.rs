use crate::algebra::{powerset_algebra, ultrafilters, BoolHom, UltraFilter};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::stone::embedding::dual_space;
use crate::topology::{ContinuousMap, FinSpace};

/// `h_* : Uf(B2) -> Uf(B1)`, `v ↦ h⁻¹[v]`.
pub fn dual_map(h: &BoolHom) -> Result<ContinuousMap> {
    let (b1, b2) = (h.source(), h.target());
    let uf1 = ultrafilters(b1)?;
    let table = ultrafilters(b2)?
        .iter()
        .map(|v| {
            let pre: Bits = (0..b1.size()).filter(|&a| v.contains(h.apply(a))).collect();
            uf1.iter()
                .position(|u| u.members() == pre)
                .ok_or(Error::Invariant(
                    "preimage of an ultrafilter is not an ultrafilter",
                ))
        })
        .collect::<Result<_>>()?;
    ContinuousMap::new(
        dual_space(b2)?.as_space(),
        dual_space(b1)?.as_space(),
        table,
    )
}

/// Points of a space of ultrafilters whose member set contains `a`.
pub fn hat_phi_in(space: &FinSpace<UltraFilter>, a: usize) -> Bits {
    (0..space.len())
        .filter(|&i| space.point(i).contains(a))
        .collect()
}

/// `{∇ ∈ Uf(P(Uf(B))) : A ∈ ∇}` for `A ⊆ Uf(B)`, as indices into the
/// ultrafilters of the powerset algebra of `Uf(B)`.
pub fn hat_phi(b: &crate::algebra::FinBoolAlg, a: Bits) -> Result<Bits> {
    let n = ultrafilters(b)?.len();
    if !a.is_subset(Bits::full(n)) {
        return Err(Error::Inconsistent("subset names a point outside Uf(B)"));
    }
    let powerset = powerset_algebra(n)?;
    let element = powerset.from_atom_mask(a.0 as u32);
    Ok(hat_phi_in(dual_space(&powerset)?.as_space(), element))
}
