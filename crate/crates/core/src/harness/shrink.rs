use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{hom_from_atom_map, powerset_algebra, BoolHom};
use crate::error::{Error, Result};

/// A homomorphism between powerset algebras, given by its dual: target atom
/// `t` goes to source atom `atom_map[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomInstance {
    pub source_atoms: usize,
    pub atom_map: Vec<usize>,
}

impl HomInstance {
    pub fn of(h: &BoolHom) -> Result<Self> {
        let (s, t) = (h.source(), h.target());
        let atom_map = (0..t.atom_count())
            .map(|ta| {
                (0..s.atom_count())
                    .find(|&k| t.atom_mask(h.apply(s.atom(k))) >> ta & 1 == 1)
                    .ok_or(Error::Invariant(
                        "target atom lies under no image of a source atom",
                    ))
            })
            .collect::<Result<_>>()?;
        Ok(HomInstance {
            source_atoms: s.atom_count(),
            atom_map,
        })
    }

    pub fn target_atoms(&self) -> usize {
        self.atom_map.len()
    }

    pub fn build(&self) -> Result<BoolHom> {
        hom_from_atom_map(
            Arc::new(powerset_algebra(self.source_atoms)?),
            Arc::new(powerset_algebra(self.target_atoms())?),
            &self.atom_map,
        )
    }

    /// One-step reductions: drop a target atom, or drop a source atom that
    /// no target atom maps to. Neither side is allowed to become degenerate.
    pub fn shrinks(&self) -> Vec<HomInstance> {
        let mut out = Vec::new();
        if self.target_atoms() > 1 {
            for t in 0..self.target_atoms() {
                let mut atom_map = self.atom_map.clone();
                atom_map.remove(t);
                out.push(HomInstance {
                    source_atoms: self.source_atoms,
                    atom_map,
                });
            }
        }
        if self.source_atoms > 1 {
            for s in (0..self.source_atoms).filter(|s| !self.atom_map.contains(s)) {
                out.push(HomInstance {
                    source_atoms: self.source_atoms - 1,
                    atom_map: self
                        .atom_map
                        .iter()
                        .map(|&k| if k > s { k - 1 } else { k })
                        .collect(),
                });
            }
        }
        out
    }
}

impl fmt::Display for HomInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P({}) -> P({}) with atom map {:?}",
            self.source_atoms,
            self.target_atoms(),
            self.atom_map
        )
    }
}

/// Greedily applies [`HomInstance::shrinks`] while `fails` keeps holding.
pub fn shrink_instance(
    start: HomInstance,
    mut fails: impl FnMut(&HomInstance) -> bool,
) -> HomInstance {
    let mut current = start;
    while let Some(next) = current.shrinks().into_iter().find(|c| fails(c)) {
        current = next;
    }
    current
}
