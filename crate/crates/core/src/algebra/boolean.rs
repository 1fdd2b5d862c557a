use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::lattice::FinLattice;
use super::poset::FinPoset;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Largest atom count accepted by any single-algebra constructor.
pub const MAX_ATOMS: usize = 5;

/// A finite Boolean algebra in canonical form.
///
/// The carrier is `0..2^atom_count` and element `i` *is* its atom mask: bit
/// `k` of `i` is set iff atom `k` lies below it. Order is mask inclusion.
/// Labels, when present, come from the abstract presentation the algebra was
/// normalized from and are indexed by canonical element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBoolAlg {
    lattice: FinLattice,
    complement: Vec<usize>,
    atom_count: usize,
    labels: Option<Vec<String>>,
}

/// Carrier, order pairs and complement pairs, all by carrier index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub labels: Vec<String>,
    pub leq: Vec<(usize, usize)>,
    pub complement: Vec<(usize, usize)>,
}

/// The `2^n`-element algebra of subsets of `{0, .., n-1}`.
pub fn powerset_algebra(n: usize) -> Result<FinBoolAlg> {
    if n > MAX_ATOMS {
        return Err(Error::BoundExceeded {
            what: "atom count",
            limit: MAX_ATOMS,
            got: n,
        });
    }
    let size = 1usize << n;
    let full = size - 1;
    Ok(FinBoolAlg {
        lattice: FinLattice::powerset(n)?,
        complement: (0..size).map(|m| !m & full).collect(),
        atom_count: n,
        labels: None,
    })
}

/// Validates an abstract presentation and normalizes it to canonical form.
///
/// `leq` pairs are closed reflexively and transitively before checking.
/// Complement pairs are read symmetrically. Atoms are numbered in carrier
/// order, so the result is deterministic in the presentation.
pub fn validate_boolean_algebra(p: &Presentation) -> Result<FinBoolAlg> {
    let n = p.labels.len();
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > 1 << MAX_ATOMS {
        return Err(Error::BoundExceeded {
            what: "boolean algebra carrier",
            limit: 1 << MAX_ATOMS,
            got: n,
        });
    }
    let poset = FinPoset::from_pairs(n, &p.leq)?;
    let lattice = FinLattice::from_poset(poset)?;
    if let Some((a, b, c)) = lattice.distributivity_witness() {
        return Err(Error::NotDistributive { a, b, c });
    }

    let mut comp: Vec<Option<usize>> = alloc::vec![None; n];
    for &(a, b) in &p.complement {
        if a >= n || b >= n {
            return Err(Error::Inconsistent(
                "complement pair names an element outside the carrier",
            ));
        }
        for (x, y) in [(a, b), (b, a)] {
            match comp[x] {
                Some(prev) if prev != y => return Err(Error::ComplementLawFails { element: x }),
                _ => comp[x] = Some(y),
            }
        }
    }
    for (x, c) in comp.iter().enumerate() {
        let c = c.ok_or(Error::ComplementLawFails { element: x })?;
        if lattice.meet(x, c) != lattice.bottom() || lattice.join(x, c) != lattice.top() {
            return Err(Error::ComplementLawFails { element: x });
        }
    }

    let bottom = lattice.bottom();
    let above_bottom = lattice.poset().up(bottom).minus(Bits::singleton(bottom));
    let atoms: Vec<usize> = lattice.poset().minimal(above_bottom).iter().collect();
    let k = atoms.len();
    if k > MAX_ATOMS {
        return Err(Error::BoundExceeded {
            what: "atom count",
            limit: MAX_ATOMS,
            got: k,
        });
    }
    // canonical index of each presented element
    let mask_of: Vec<usize> = (0..n)
        .map(|x| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| lattice.leq(a, x))
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    if n != 1 << k || Bits::from_iter(mask_of.iter().copied()) != Bits::full(n) {
        return Err(Error::Invariant(
            "atom masks of a complemented distributive lattice are not a bijection",
        ));
    }
    let mut labels = alloc::vec![String::new(); n];
    for (x, &m) in mask_of.iter().enumerate() {
        labels[m] = p.labels[x].clone();
    }
    let mut alg = powerset_algebra(k)?;
    // order must agree with mask inclusion
    for x in 0..n {
        for y in 0..n {
            if lattice.leq(x, y) != alg.leq(mask_of[x], mask_of[y]) {
                return Err(Error::Invariant(
                    "atom mask encoding is not an order isomorphism",
                ));
            }
        }
    }
    alg.labels = Some(labels);
    Ok(alg)
}

impl FinBoolAlg {
    #[inline]
    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.complement.len()
    }

    #[inline]
    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    #[inline]
    pub fn is_degenerate(&self) -> bool {
        self.atom_count == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    #[inline]
    pub fn complement(&self, a: usize) -> usize {
        self.complement[a]
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Bitmask over atoms of the atoms below `a`.
    #[inline]
    pub fn atom_mask(&self, a: usize) -> u32 {
        a as u32
    }

    /// Element whose atom mask is `mask`.
    #[inline]
    pub fn from_atom_mask(&self, mask: u32) -> usize {
        mask as usize
    }

    /// Element index of the `k`-th atom.
    #[inline]
    pub fn atom(&self, k: usize) -> usize {
        1 << k
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Presentation label, or the set of atom numbers below `a` (`{0,2}`).
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => mask_label(a),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        (0..self.size()).find(|&a| self.label(a) == label)
    }

    /// The same algebra with labels dropped.
    pub fn unlabeled(&self) -> FinBoolAlg {
        FinBoolAlg {
            labels: None,
            ..self.clone()
        }
    }

    /// Full order relation and complement pairs, with this algebra's labels.
    pub fn to_presentation(&self) -> Presentation {
        let n = self.size();
        Presentation {
            labels: (0..n).map(|a| self.label(a)).collect(),
            leq: self.lattice.poset().all_leq_pairs(),
            complement: (0..n).map(|a| (a, self.complement(a))).collect(),
        }
    }
}

/// Minimal nonzero elements, ascending.
pub fn atoms(b: &FinBoolAlg) -> Bits {
    let bottom = b.bottom();
    let nonzero = b.lattice().carrier().minus(Bits::singleton(bottom));
    b.lattice().poset().minimal(nonzero)
}

pub(crate) fn mask_label(mask: usize) -> String {
    let inner: Vec<String> = Bits(mask as u64).iter().map(|i| format!("{i}")).collect();
    format!("{{{}}}", inner.join(","))
}
