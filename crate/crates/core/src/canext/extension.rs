use alloc::vec::Vec;

use super::completion::{is_compact, is_dense, Compactness, Completion, Density};
use crate::algebra::{ultrafilters, FinBoolAlg, FinLattice, UltraFilter};
use crate::error::{Error, Result};
use crate::stone::phi_table;

/// `⟨P(Uf(B)), φ⟩`. Element `A` of the complete lattice is the subset of
/// [`CanonicalExtension::points`] whose bitmask is `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalExtension {
    completion: Completion,
    points: Vec<UltraFilter>,
}

impl CanonicalExtension {
    pub fn completion(&self) -> &Completion {
        &self.completion
    }

    pub fn points(&self) -> &[UltraFilter] {
        &self.points
    }

    /// The atoms of `B^σ`: one singleton per ultrafilter.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.points.len()).map(|i| 1 << i).collect()
    }
}

pub fn canonical_extension(b: &FinBoolAlg) -> Result<CanonicalExtension> {
    let points = ultrafilters(b)?;
    let complete = FinLattice::powerset(points.len())?;
    let embedding = phi_table(b)?.into_iter().map(|s| s.0 as usize).collect();
    let completion = Completion::new(b.lattice().clone(), complete, embedding)?;
    if is_dense(&completion) != Density::Dense {
        return Err(Error::Invariant("⟨P(Uf(B)), φ⟩ is not dense"));
    }
    if is_compact(&completion) != Compactness::Compact {
        return Err(Error::Invariant("⟨P(Uf(B)), φ⟩ is not compact"));
    }
    Ok(CanonicalExtension { completion, points })
}
