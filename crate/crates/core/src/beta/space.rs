use alloc::sync::Arc;
use alloc::vec::Vec;

use super::compactification::Compactification;
use crate::algebra::{powerset_algebra, FinBoolAlg, UltraFilter};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::stone::dual_space;
use crate::topology::{all_maps, ContinuousMap, StoneSpace};

/// Largest discrete base accepted by [`beta_space`].
pub const MAX_BETA_POINTS: usize = 4;

/// `βX = P(X)_*` for `X = {0, .., n-1}`, with `β(x) = {A ⊆ X : x ∈ A}`.
///
/// Element `A` of [`BetaSpace::algebra`] is the subset of `X` with bitmask
/// `A`, so an ultrafilter's member set is a set of such masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSpace {
    algebra: Arc<FinBoolAlg>,
    compactification: Compactification<UltraFilter>,
}

impl BetaSpace {
    pub fn algebra(&self) -> &Arc<FinBoolAlg> {
        &self.algebra
    }

    pub fn compactification(&self) -> &Compactification<UltraFilter> {
        &self.compactification
    }

    pub fn space(&self) -> &StoneSpace<UltraFilter> {
        self.compactification.space()
    }

    /// The discrete base `X`.
    pub fn base(&self) -> &StoneSpace<usize> {
        self.compactification.base()
    }

    pub fn base_len(&self) -> usize {
        self.compactification.base_len()
    }

    /// `β(x)` as a point index of [`BetaSpace::space`].
    pub fn embed(&self, x: usize) -> usize {
        self.compactification.embed()[x]
    }

    pub fn len(&self) -> usize {
        self.space().len()
    }

    pub fn is_empty(&self) -> bool {
        self.space().is_empty()
    }
}

pub fn beta_space(n: usize) -> Result<BetaSpace> {
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    if n > MAX_BETA_POINTS {
        return Err(Error::BoundExceeded {
            what: "discrete space points",
            limit: MAX_BETA_POINTS,
            got: n,
        });
    }
    let algebra = Arc::new(powerset_algebra(n)?);
    let space = dual_space(&algebra)?;
    let embed = (0..n)
        .map(|x| {
            let principal: Bits = (0..algebra.size())
                .filter(|&a| algebra.atom_mask(a) >> x & 1 == 1)
                .collect();
            space
                .points()
                .iter()
                .position(|u| u.members() == principal)
                .ok_or(Error::Invariant(
                    "principal ultrafilter missing from P(X)_*",
                ))
        })
        .collect::<Result<Vec<_>>>()?;
    let compactification = Compactification::new(n, space, embed)?;
    Ok(BetaSpace {
        algebra,
        compactification,
    })
}

fn check_map(f: &[usize], source: usize, target: usize) -> Result<()> {
    if f.len() != source {
        return Err(Error::NotTotal {
            expected: source,
            got: f.len(),
        });
    }
    if let Some((element, &image)) = f.iter().enumerate().find(|(_, &y)| y >= target) {
        return Err(Error::OutOfRange { element, image });
    }
    Ok(())
}

/// The unique continuous `g: βX -> Y` with `g ∘ β = f`.
///
/// `g(∇)` is the limit of `f` along `∇`: the point `y` whose every
/// neighbourhood pulls back into `∇`. The result is then certified by
/// scanning all `|Y|^|βX|` candidates and requiring exactly one continuous
/// solution, equal to the limit map.
pub fn beta_extend_to_compact<P>(
    beta: &BetaSpace,
    f: &[usize],
    y: &StoneSpace<P>,
) -> Result<ContinuousMap> {
    let n = beta.base_len();
    check_map(f, n, y.len())?;
    let pull = |s: Bits| -> usize {
        let mask: Bits = (0..n).filter(|&x| s.contains(f[x])).collect();
        beta.algebra.from_atom_mask(mask.0 as u32)
    };
    let table = beta
        .space()
        .points()
        .iter()
        .map(|nabla| {
            let limits: Vec<usize> = (0..y.len())
                .filter(|&p| nabla.contains(pull(y.neighbourhood(p))))
                .collect();
            match limits.as_slice() {
                [p] => Ok(*p),
                [] => Err(Error::NoExtension),
                many => Err(Error::ExtensionNotUnique { count: many.len() }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let g = ContinuousMap::new(beta.space(), y, table)?;

    let mut solutions = 0;
    for candidate in all_maps(beta.len(), y.len())? {
        let commutes = (0..n).all(|x| candidate[beta.embed(x)] == f[x]);
        if commutes && ContinuousMap::new(beta.space(), y, candidate.clone()).is_ok() {
            solutions += 1;
            if candidate != g.table() {
                return Err(Error::Invariant(
                    "a continuous extension differs from the ultrafilter limit",
                ));
            }
        }
    }
    match solutions {
        0 => Err(Error::NoExtension),
        1 => Ok(g),
        count => Err(Error::ExtensionNotUnique { count }),
    }
}

/// `f^β: βX -> βY`, `f^β(∇) = {B ⊆ Y : f⁻¹[B] ∈ ∇}`.
pub fn beta_lift(beta_x: &BetaSpace, beta_y: &BetaSpace, f: &[usize]) -> Result<ContinuousMap> {
    let (nx, ny) = (beta_x.base_len(), beta_y.base_len());
    check_map(f, nx, ny)?;
    let (px, py) = (&beta_x.algebra, &beta_y.algebra);
    let table = beta_x
        .space()
        .points()
        .iter()
        .map(|nabla| {
            let members: Bits = (0..py.size())
                .filter(|&b| {
                    let b_mask = py.atom_mask(b);
                    let pre: u32 = (0..nx)
                        .filter(|&x| b_mask >> f[x] & 1 == 1)
                        .fold(0, |m, x| m | 1 << x);
                    nabla.contains(px.from_atom_mask(pre))
                })
                .collect();
            beta_y
                .space()
                .points()
                .iter()
                .position(|u| u.members() == members)
                .ok_or(Error::Invariant("f^β(∇) is not an ultrafilter"))
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(beta_x.space(), beta_y.space(), table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapProperty {
    Injective,
    Surjective,
    /// For the lift: bijective with continuous inverse.
    Bijective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Preservation {
    /// `f` has the property.
    pub premise: bool,
    /// `f^β` has the property.
    pub conclusion: bool,
}

impl Preservation {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

/// Whether `f: X -> Y` (with `|Y| = target_len`) having `property` carries
/// over to `f^β`.
pub fn beta_preserves(
    f: &[usize],
    target_len: usize,
    property: MapProperty,
) -> Result<Preservation> {
    let bx = beta_space(f.len())?;
    let by = beta_space(target_len)?;
    let lift = beta_lift(&bx, &by, f)?;
    let plain = ContinuousMap::new(bx.base(), by.base(), f.to_vec())?;
    let has = |m: &ContinuousMap, homeo: bool| match property {
        MapProperty::Injective => m.is_injective(),
        MapProperty::Surjective => m.is_surjective(),
        MapProperty::Bijective if homeo => m.is_homeomorphism(bx.space(), by.space()),
        MapProperty::Bijective => m.is_injective() && m.is_surjective(),
    };
    Ok(Preservation {
        premise: has(&plain, false),
        conclusion: has(&lift, true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_beta_spaces() {
        let b1 = beta_space(1).unwrap();
        assert_eq!(b1.len(), 1);
        let b2 = beta_space(2).unwrap();
        assert_eq!(b2.len(), 2);
        // points are the principal ultrafilters of the 4-element powerset
        assert_eq!(b2.space().point(0).members(), Bits(0b1010));
        assert_eq!(b2.space().point(1).members(), Bits(0b1100));
        let b3 = beta_space(3).unwrap();
        let image: Bits = (0..3).map(|x| b3.embed(x)).collect();
        assert_eq!(image, Bits::full(3));
    }

    #[test]
    fn beta_space_bounds() {
        assert_eq!(beta_space(0), Err(Error::EmptySpace));
        assert!(matches!(beta_space(5), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn extend_identity_into_beta() {
        let b = beta_space(2).unwrap();
        let f: Vec<usize> = (0..2).map(|x| b.embed(x)).collect();
        let g = beta_extend_to_compact(&b, &f, b.space()).unwrap();
        assert_eq!(g.table(), [0, 1]);
    }

    #[test]
    fn extend_constant() {
        let b = beta_space(3).unwrap();
        let y = StoneSpace::discrete_n(2).unwrap();
        let g = beta_extend_to_compact(&b, &[1, 1, 1], &y).unwrap();
        assert_eq!(g.table(), [1, 1, 1]);
    }

    #[test]
    fn extend_surjection() {
        let b = beta_space(3).unwrap();
        let y = StoneSpace::discrete_n(2).unwrap();
        let f = [0, 1, 0];
        let g = beta_extend_to_compact(&b, &f, &y).unwrap();
        for (x, &fx) in f.iter().enumerate() {
            assert_eq!(g.apply(b.embed(x)), fx);
        }
    }

    #[test]
    fn lift_identity_and_collapse() {
        let b2 = beta_space(2).unwrap();
        assert_eq!(beta_lift(&b2, &b2, &[0, 1]).unwrap().table(), [0, 1]);
        let b1 = beta_space(1).unwrap();
        assert_eq!(beta_lift(&b2, &b1, &[0, 0]).unwrap().table(), [0, 0]);
    }

    #[test]
    fn preservation_examples() {
        let inj = beta_preserves(&[0], 2, MapProperty::Injective).unwrap();
        assert!(inj.premise && inj.conclusion);
        let sur = beta_preserves(&[0, 0], 1, MapProperty::Surjective).unwrap();
        assert!(sur.premise && sur.conclusion);
        let bij = beta_preserves(&[1, 0], 2, MapProperty::Bijective).unwrap();
        assert!(bij.premise && bij.conclusion);
        let vacuous = beta_preserves(&[0, 0], 2, MapProperty::Injective).unwrap();
        assert!(!vacuous.premise && vacuous.holds());
    }

    #[test]
    fn map_shape_errors() {
        let b = beta_space(2).unwrap();
        let y = StoneSpace::discrete_n(2).unwrap();
        assert!(matches!(
            beta_extend_to_compact(&b, &[0], &y),
            Err(Error::NotTotal { .. })
        ));
        assert!(matches!(
            beta_extend_to_compact(&b, &[0, 2], &y),
            Err(Error::OutOfRange { .. })
        ));
    }
}
