use alloc::vec::Vec;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::topology::{all_maps, ContinuousMap, StoneSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompactificationKind {
    /// A homeomorphic embedding with dense image.
    Embedding,
    /// Any map with dense image. On a finite discrete base every genuine
    /// compactification is a bijection, so quotient maps of this kind are
    /// what give the order on compactifications something to compare.
    DenseImage,
}

/// A finite discrete base `{0, .., base_len-1}` mapped densely into a
/// compact Hausdorff space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compactification<P> {
    base: StoneSpace<usize>,
    space: StoneSpace<P>,
    embed: Vec<usize>,
    kind: CompactificationKind,
}

impl<P> Compactification<P> {
    /// Requires `embed` injective, a homeomorphism onto its image, with
    /// dense image.
    pub fn new(base_len: usize, space: StoneSpace<P>, embed: Vec<usize>) -> Result<Self> {
        let c = Self::build(base_len, space, embed, CompactificationKind::Embedding)?;
        for a in 0..base_len {
            for b in a + 1..base_len {
                if c.embed[a] == c.embed[b] {
                    return Err(Error::NotAnEmbedding { a, b });
                }
            }
        }
        let image = c.image();
        for x in 0..base_len {
            let p = c.embed[x];
            // subspace topology on the image must be discrete
            if c.space.neighbourhood(p) & image != Bits::singleton(p) {
                return Err(Error::NotAnEmbedding { a: x, b: x });
            }
        }
        Ok(c)
    }

    /// Requires only a dense image.
    pub fn dense_image(base_len: usize, space: StoneSpace<P>, map: Vec<usize>) -> Result<Self> {
        Self::build(base_len, space, map, CompactificationKind::DenseImage)
    }

    fn build(
        base_len: usize,
        space: StoneSpace<P>,
        embed: Vec<usize>,
        kind: CompactificationKind,
    ) -> Result<Self> {
        if base_len == 0 {
            return Err(Error::EmptySpace);
        }
        let base = StoneSpace::discrete_n(base_len)?;
        // continuity from a discrete base is automatic; this checks totality and range
        ContinuousMap::new(&base, &space, embed.clone())?;
        let c = Compactification {
            base,
            space,
            embed,
            kind,
        };
        let closure = c.space.closure(c.image());
        if let Some(point) = c.space.all().minus(closure).first() {
            return Err(Error::NotDense { point });
        }
        Ok(c)
    }

    pub fn base(&self) -> &StoneSpace<usize> {
        &self.base
    }

    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    pub fn space(&self) -> &StoneSpace<P> {
        &self.space
    }

    pub fn embed(&self) -> &[usize] {
        &self.embed
    }

    pub fn kind(&self) -> CompactificationKind {
        self.kind
    }

    pub fn image(&self) -> Bits {
        self.embed.iter().copied().collect()
    }
}

fn same_base<P, Q>(c1: &Compactification<P>, c2: &Compactification<Q>) -> Result<()> {
    if c1.base_len() != c2.base_len() {
        return Err(Error::Inconsistent("compactifications of different spaces"));
    }
    Ok(())
}

/// `c1 ≤ c2`: a continuous `f: c2X -> c1X` with `f ∘ c2 = c1`, if any.
pub fn compactification_leq<P, Q>(
    c1: &Compactification<P>,
    c2: &Compactification<Q>,
) -> Result<Option<ContinuousMap>> {
    same_base(c1, c2)?;
    for table in all_maps(c2.space.len(), c1.space.len())? {
        let commutes = (0..c1.base_len()).all(|x| table[c2.embed[x]] == c1.embed[x]);
        if !commutes {
            continue;
        }
        if let Ok(f) = ContinuousMap::new(&c2.space, &c1.space, table) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// A homeomorphism `f: c1X -> c2X` with `f ∘ c1 = c2`, if any.
pub fn compactification_equivalent<P, Q>(
    c1: &Compactification<P>,
    c2: &Compactification<Q>,
) -> Result<Option<ContinuousMap>> {
    same_base(c1, c2)?;
    if c1.space.len() != c2.space.len() {
        return Ok(None);
    }
    for table in all_maps(c1.space.len(), c2.space.len())? {
        let commutes = (0..c1.base_len()).all(|x| table[c1.embed[x]] == c2.embed[x]);
        if !commutes {
            continue;
        }
        if let Ok(f) = ContinuousMap::new(&c1.space, &c2.space, table) {
            if f.is_homeomorphism(&c1.space, &c2.space) {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}
