//! Finite topological spaces generated by a base, Stone-space validation and
//! continuous maps.

use alloc::vec::Vec;
use core::ops::Deref;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Point bound for spaces (subset scans are `2^points`).
pub const MAX_POINTS: usize = 16;

/// Candidate bound for exhaustive map searches: `|target|^|source|`.
pub const MAP_SEARCH_LIMIT: usize = 256;

/// A finite space whose topology is generated by `base` (read as a subbase:
/// opens are unions of finite intersections, the empty intersection being
/// the whole space).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSpace<P> {
    points: Vec<P>,
    base: Vec<Bits>,
    nbhd: Vec<Bits>,
}

impl<P> FinSpace<P> {
    pub fn new(points: Vec<P>, base: Vec<Bits>) -> Result<Self> {
        let n = points.len();
        if n > MAX_POINTS {
            return Err(Error::BoundExceeded {
                what: "space points",
                limit: MAX_POINTS,
                got: n,
            });
        }
        let all = Bits::full(n);
        if base.iter().any(|b| !b.is_subset(all)) {
            return Err(Error::Inconsistent(
                "base set names a point outside the space",
            ));
        }
        let nbhd = (0..n)
            .map(|x| {
                base.iter()
                    .filter(|b| b.contains(x))
                    .fold(all, |acc, &b| acc & b)
            })
            .collect();
        Ok(FinSpace { points, base, nbhd })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[P] {
        &self.points
    }

    #[inline]
    pub fn point(&self, i: usize) -> &P {
        &self.points[i]
    }

    #[inline]
    pub fn base(&self) -> &[Bits] {
        &self.base
    }

    #[inline]
    pub fn all(&self) -> Bits {
        Bits::full(self.len())
    }

    /// Smallest open set containing `x`.
    #[inline]
    pub fn neighbourhood(&self, x: usize) -> Bits {
        self.nbhd[x]
    }

    pub fn is_open(&self, s: Bits) -> bool {
        s.iter().all(|x| self.nbhd[x].is_subset(s))
    }

    pub fn is_clopen(&self, s: Bits) -> bool {
        self.is_open(s) && self.is_open(s.complement(self.len()))
    }

    pub fn closure(&self, s: Bits) -> Bits {
        (0..self.len())
            .filter(|&x| !(self.nbhd[x] & s).is_empty())
            .collect()
    }

    /// All clopen sets, ascending by bitmask.
    pub fn clopens(&self) -> Vec<Bits> {
        Bits::subsets_of(self.len())
            .filter(|&s| self.is_clopen(s))
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|x| self.nbhd[x] == Bits::singleton(x))
    }

    /// Compact (finite), Hausdorff and zero-dimensional.
    pub fn check_stone(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in x + 1..n {
                if !(self.nbhd[x] & self.nbhd[y]).is_empty() {
                    return Err(Error::NotStone(
                        "two points have no disjoint neighbourhoods",
                    ));
                }
            }
        }
        let clopens = self.clopens();
        for x in 0..n {
            let ok = clopens
                .iter()
                .any(|c| c.contains(x) && c.is_subset(self.nbhd[x]));
            if !ok {
                return Err(Error::NotStone("clopen sets do not form a base"));
            }
        }
        Ok(())
    }
}

/// A [`FinSpace`] that passed [`FinSpace::check_stone`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneSpace<P>(FinSpace<P>);

impl<P> StoneSpace<P> {
    pub fn new(points: Vec<P>, base: Vec<Bits>) -> Result<Self> {
        Self::try_from_space(FinSpace::new(points, base)?)
    }

    pub fn try_from_space(space: FinSpace<P>) -> Result<Self> {
        space.check_stone()?;
        Ok(StoneSpace(space))
    }

    /// Discrete space with the singletons as base.
    pub fn discrete(points: Vec<P>) -> Result<Self> {
        let base = (0..points.len()).map(Bits::singleton).collect();
        Self::new(points, base)
    }

    pub fn as_space(&self) -> &FinSpace<P> {
        &self.0
    }
}

impl StoneSpace<usize> {
    /// `{0, .., n-1}` with the discrete topology.
    pub fn discrete_n(n: usize) -> Result<Self> {
        Self::discrete((0..n).collect())
    }
}

impl<P> Deref for StoneSpace<P> {
    type Target = FinSpace<P>;
    fn deref(&self) -> &FinSpace<P> {
        &self.0
    }
}

/// A point map between finite spaces, checked continuous on construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContinuousMap {
    target_len: usize,
    table: Vec<usize>,
}

impl ContinuousMap {
    pub fn new<P, Q>(
        source: &FinSpace<P>,
        target: &FinSpace<Q>,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != source.len() {
            return Err(Error::NotTotal {
                expected: source.len(),
                got: table.len(),
            });
        }
        if let Some((element, &image)) = table.iter().enumerate().find(|(_, &t)| t >= target.len())
        {
            return Err(Error::OutOfRange { element, image });
        }
        let map = ContinuousMap {
            target_len: target.len(),
            table,
        };
        if let Some(base_set) = map.discontinuity(source, target) {
            return Err(Error::NotContinuous { base_set });
        }
        Ok(map)
    }

    pub fn identity<P>(space: &FinSpace<P>) -> Self {
        ContinuousMap {
            target_len: space.len(),
            table: (0..space.len()).collect(),
        }
    }

    /// Index of a target base set whose preimage is not open.
    fn discontinuity<P, Q>(&self, source: &FinSpace<P>, target: &FinSpace<Q>) -> Option<usize> {
        target
            .base()
            .iter()
            .position(|&b| !source.is_open(self.preimage(b)))
    }

    #[inline]
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn source_len(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn target_len(&self) -> usize {
        self.target_len
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn preimage(&self, s: Bits) -> Bits {
        (0..self.table.len())
            .filter(|&x| s.contains(self.table[x]))
            .collect()
    }

    pub fn image(&self, s: Bits) -> Bits {
        s.iter().map(|x| self.table[x]).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ContinuousMap) -> Result<ContinuousMap> {
        if self.target_len != next.source_len() {
            return Err(Error::Inconsistent("composed maps do not meet"));
        }
        Ok(ContinuousMap {
            target_len: next.target_len,
            table: self.table.iter().map(|&x| next.apply(x)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        Bits::from_iter(self.table.iter().copied()).len() == self.table.len()
    }

    pub fn is_surjective(&self) -> bool {
        Bits::from_iter(self.table.iter().copied()) == Bits::full(self.target_len)
    }

    /// Bijective with a continuous inverse.
    pub fn is_homeomorphism<P, Q>(&self, source: &FinSpace<P>, target: &FinSpace<Q>) -> bool {
        if !(self.is_injective() && self.is_surjective()) {
            return false;
        }
        let mut inv = alloc::vec![0; self.target_len];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y] = x;
        }
        ContinuousMap::new(target, source, inv).is_ok()
    }
}

/// Every function `0..source_len -> 0..target_len`, in lexicographic order
/// of tables (last position fastest).
pub fn all_maps(source_len: usize, target_len: usize) -> Result<AllMaps> {
    let count = (target_len as u128)
        .checked_pow(source_len as u32)
        .unwrap_or(u128::MAX);
    if count > MAP_SEARCH_LIMIT as u128 {
        return Err(Error::BoundExceeded {
            what: "map search candidates",
            limit: MAP_SEARCH_LIMIT,
            got: count.min(usize::MAX as u128) as usize,
        });
    }
    Ok(AllMaps {
        target_len,
        next: (count > 0).then(|| alloc::vec![0; source_len]),
    })
}

pub struct AllMaps {
    target_len: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllMaps {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.target_len {
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}
