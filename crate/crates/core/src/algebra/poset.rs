use alloc::vec::Vec;

use crate::bits::{Bits, CAPACITY};
use crate::error::{Error, Result};

/// A finite partial order on `0..size`, stored as up-sets and down-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    up: Vec<Bits>,
    down: Vec<Bits>,
}

impl FinPoset {
    /// Builds the reflexive-transitive closure of `pairs` (each `(a, b)` read
    /// as `a <= b`) and rejects it if antisymmetry fails.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if size > CAPACITY {
            return Err(Error::BoundExceeded {
                what: "carrier size",
                limit: CAPACITY,
                got: size,
            });
        }
        let mut up: Vec<Bits> = (0..size).map(Bits::singleton).collect();
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::Inconsistent(
                    "order pair names an element outside the carrier",
                ));
            }
            up[a].insert(b);
        }
        // Warshall on bit rows.
        for k in 0..size {
            for i in 0..size {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        Self::from_up_sets(up)
    }

    /// `leq(i, j)` given as a closure; must already be reflexive and transitive.
    pub fn from_fn(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if size > CAPACITY {
            return Err(Error::BoundExceeded {
                what: "carrier size",
                limit: CAPACITY,
                got: size,
            });
        }
        let up: Vec<Bits> = (0..size)
            .map(|i| (0..size).filter(|&j| leq(i, j)).collect())
            .collect();
        for i in 0..size {
            if !up[i].contains(i) {
                return Err(Error::Inconsistent("order is not reflexive"));
            }
            for j in up[i] {
                if !up[j].is_subset(up[i]) {
                    return Err(Error::Inconsistent("order is not transitive"));
                }
            }
        }
        Self::from_up_sets(up)
    }

    fn from_up_sets(up: Vec<Bits>) -> Result<Self> {
        let size = up.len();
        let mut down = alloc::vec![Bits::EMPTY; size];
        for (i, &u) in up.iter().enumerate() {
            for j in u {
                down[j].insert(i);
            }
        }
        for i in 0..size {
            if let Some(j) = (up[i] & down[i]).minus(Bits::singleton(i)).first() {
                return Err(Error::NotAPoset {
                    a: i.min(j),
                    b: i.max(j),
                });
            }
        }
        Ok(FinPoset { up, down })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.up.len()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `{b : a <= b}`.
    #[inline]
    pub fn up(&self, a: usize) -> Bits {
        self.up[a]
    }

    /// `{b : b <= a}`.
    #[inline]
    pub fn down(&self, a: usize) -> Bits {
        self.down[a]
    }

    /// Upward closure of a set.
    pub fn up_closure(&self, s: Bits) -> Bits {
        s.iter().fold(Bits::EMPTY, |acc, a| acc | self.up[a])
    }

    pub fn down_closure(&self, s: Bits) -> Bits {
        s.iter().fold(Bits::EMPTY, |acc, a| acc | self.down[a])
    }

    /// Elements of `s` with nothing in `s` strictly below them.
    pub fn minimal(&self, s: Bits) -> Bits {
        s.iter()
            .filter(|&a| (self.down[a] & s) == Bits::singleton(a))
            .collect()
    }

    pub fn all_leq_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .flat_map(|a| self.up[a].iter().map(move |b| (a, b)))
            .collect()
    }

    /// Covering pairs `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            let above = self.up[a].minus(Bits::singleton(a));
            for b in self.minimal(above) {
                out.push((a, b));
            }
        }
        out
    }
}
