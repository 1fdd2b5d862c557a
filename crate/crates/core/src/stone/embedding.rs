use alloc::vec::Vec;

use crate::algebra::{ultrafilters, FinBoolAlg, UltraFilter};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::topology::StoneSpace;

/// `{u ∈ Uf(B) : a ∈ u}`, as indices into [`ultrafilters`]`(b)`.
pub fn phi(b: &FinBoolAlg, a: usize) -> Result<Bits> {
    if a >= b.size() {
        return Err(Error::OutOfRange {
            element: a,
            image: a,
        });
    }
    Ok(ultrafilters(b)?
        .iter()
        .enumerate()
        .filter(|(_, u)| u.contains(a))
        .map(|(i, _)| i)
        .collect())
}

/// `phi` for every element, indexed by element.
pub fn phi_table(b: &FinBoolAlg) -> Result<Vec<Bits>> {
    let uf = ultrafilters(b)?;
    Ok((0..b.size())
        .map(|a| {
            uf.iter()
                .enumerate()
                .filter(|(_, u)| u.contains(a))
                .map(|(i, _)| i)
                .collect()
        })
        .collect())
}

/// The ultrafilter space with base `{phi(a) : a ∈ B}`.
pub fn dual_space(b: &FinBoolAlg) -> Result<StoneSpace<UltraFilter>> {
    let points = ultrafilters(b)?;
    let base = phi_table(b)?;
    let space = StoneSpace::new(points, base)?;
    if !space.is_discrete() {
        return Err(Error::Invariant(
            "dual space of a finite algebra is not discrete",
        ));
    }
    Ok(space)
}
