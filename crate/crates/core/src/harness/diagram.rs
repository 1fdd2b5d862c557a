//! The composite of dual, Stone-Čech lift and dual again:
//!
//! ```text
//! B1 ──(.)_*──▶ Uf(B1) ──β1──▶ β(Uf(B1)) ──(.)^*──▶ P(Uf(B1))
//! │h              ▲h_*           ▲h_*^β                │(h_*^β)^*
//! ▼               │              │                     ▼
//! B2 ──(.)_*──▶ Uf(B2) ──β2──▶ β(Uf(B2)) ──(.)^*──▶ P(Uf(B2))
//! ```
//!
//! Nothing here may depend on the filter-quantified extension formula.

use alloc::vec::Vec;

use crate::algebra::{BoolHom, UltraFilter, MAX_HOM_ATOMS};
use crate::beta::{beta_extend_to_compact, beta_lift, beta_space, BetaSpace};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::stone::{dual_map, dual_space, hat_phi_in};
use crate::topology::{ContinuousMap, StoneSpace};

#[derive(Debug, Clone)]
pub struct DiagramBundle {
    h: BoolHom,
    dual1: StoneSpace<UltraFilter>,
    dual2: StoneSpace<UltraFilter>,
    h_star: ContinuousMap,
    beta1: BetaSpace,
    beta2: BetaSpace,
    h_star_beta: ContinuousMap,
    double_dual: Vec<Bits>,
}

impl DiagramBundle {
    pub fn hom(&self) -> &BoolHom {
        &self.h
    }

    /// `Uf(B1)` with its Stone topology.
    pub fn dual_source(&self) -> &StoneSpace<UltraFilter> {
        &self.dual1
    }

    pub fn dual_target(&self) -> &StoneSpace<UltraFilter> {
        &self.dual2
    }

    /// `h_* : Uf(B2) -> Uf(B1)`.
    pub fn h_star(&self) -> &ContinuousMap {
        &self.h_star
    }

    pub fn beta_source(&self) -> &BetaSpace {
        &self.beta1
    }

    pub fn beta_target(&self) -> &BetaSpace {
        &self.beta2
    }

    /// `h_*^β : β(Uf(B2)) -> β(Uf(B1))`.
    pub fn h_star_beta(&self) -> &ContinuousMap {
        &self.h_star_beta
    }

    /// `(h_*^β)^*`, indexed by the bitmask of `A ⊆ Uf(B1)`.
    pub fn double_dual(&self) -> &[Bits] {
        &self.double_dual
    }

    /// `(h_*^β)⁻¹(φ̂1(A))` as a set of points of `β(Uf(B2))`.
    pub fn pulled_back(&self, a: Bits) -> Bits {
        pull_back(&self.beta1, &self.h_star_beta, a)
    }
}

fn hat(beta: &BetaSpace, a: Bits) -> Bits {
    hat_phi_in(
        beta.space().as_space(),
        beta.algebra().from_atom_mask(a.0 as u32),
    )
}

fn pull_back(beta1: &BetaSpace, h_star_beta: &ContinuousMap, a: Bits) -> Bits {
    h_star_beta.preimage(hat(beta1, a))
}

/// The unique `B ⊆ Uf(B2)` with `φ̂2(B) = (h_*^β)⁻¹(φ̂1(A))`, found by
/// scanning every candidate `B`.
fn chase(
    beta1: &BetaSpace,
    beta2: &BetaSpace,
    h_star_beta: &ContinuousMap,
    a: Bits,
) -> Result<Bits> {
    let target = pull_back(beta1, h_star_beta, a);
    let mut found = None;
    for b in Bits::subsets_of(beta2.base_len()) {
        if hat(beta2, b) == target {
            if found.is_some() {
                return Err(Error::NoClopenPreimage { subset: a.0 });
            }
            found = Some(b);
        }
    }
    found.ok_or(Error::NoClopenPreimage { subset: a.0 })
}

/// Builds every arrow and checks that `h_*^β ∘ β2 = β1 ∘ h_*`, and that the
/// universal-property extension agrees with the ultrafilter-formula lift.
pub fn build_diagram(h: &BoolHom) -> Result<DiagramBundle> {
    for b in [h.source(), h.target()] {
        if b.atom_count() > MAX_HOM_ATOMS {
            return Err(Error::BoundExceeded {
                what: "atom count for the diagram",
                limit: MAX_HOM_ATOMS,
                got: b.atom_count(),
            });
        }
    }
    let dual1 = dual_space(h.source())?;
    let dual2 = dual_space(h.target())?;
    let h_star = dual_map(h)?;
    let beta1 = beta_space(dual1.len())?;
    let beta2 = beta_space(dual2.len())?;

    let beta1_after_h_star: Vec<usize> = (0..dual2.len())
        .map(|v| beta1.embed(h_star.apply(v)))
        .collect();
    let h_star_beta = beta_extend_to_compact(&beta2, &beta1_after_h_star, beta1.space())?;

    let lifted = beta_lift(&beta2, &beta1, h_star.table())?;
    if let Some(point) = (0..beta2.len()).find(|&p| lifted.apply(p) != h_star_beta.apply(p)) {
        return Err(Error::CommutationFailure { point });
    }
    if let Some(point) =
        (0..dual2.len()).find(|&v| h_star_beta.apply(beta2.embed(v)) != beta1_after_h_star[v])
    {
        return Err(Error::CommutationFailure { point });
    }

    let double_dual = Bits::subsets_of(dual1.len())
        .map(|a| chase(&beta1, &beta2, &h_star_beta, a))
        .collect::<Result<_>>()?;
    Ok(DiagramBundle {
        h: h.clone(),
        dual1,
        dual2,
        h_star,
        beta1,
        beta2,
        h_star_beta,
        double_dual,
    })
}

/// `(h_*^β)^*(A)`, recomputed from the bundle's arrows.
pub fn double_dual_map(bundle: &DiagramBundle, a: Bits) -> Result<Bits> {
    if !a.is_subset(Bits::full(bundle.dual1.len())) {
        return Err(Error::Inconsistent("subset names a point outside Uf(B1)"));
    }
    chase(&bundle.beta1, &bundle.beta2, &bundle.h_star_beta, a)
}

/// First `(Δ, A)` where `Δ ∈ (h_*^β)⁻¹(φ̂1(A))` and `A ∈ h_*^β(Δ)` disagree.
pub fn preimage_membership_witness(bundle: &DiagramBundle) -> Option<(usize, Bits)> {
    let p1 = bundle.beta1.algebra();
    for a in Bits::subsets_of(bundle.dual1.len()) {
        let pre = bundle.pulled_back(a);
        for delta in 0..bundle.beta2.len() {
            let image = bundle.beta1.space().point(bundle.h_star_beta.apply(delta));
            if pre.contains(delta) != image.contains(p1.from_atom_mask(a.0 as u32)) {
                return Some((delta, a));
            }
        }
    }
    None
}
