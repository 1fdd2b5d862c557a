use alloc::vec::Vec;

use crate::algebra::{all_filters, all_ideals, Filter, FinLattice, Ideal};
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Bound on `|C|` for [`completion_isomorphic`].
pub const MAX_ISO_SEARCH: usize = 16;

/// A finite lattice `complete` with a lattice embedding of `base` into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    base: FinLattice,
    complete: FinLattice,
    embedding: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensitySide {
    /// `c` is not the join of the filter meets below it.
    Join,
    /// `c` is not the meet of the ideal joins above it.
    Meet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Density {
    Dense,
    NotDense { element: usize, side: DensitySide },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compactness {
    Compact,
    NotCompact { filter: Filter, ideal: Ideal },
}

impl Completion {
    /// Checks that `embedding` is injective and preserves binary meets and joins.
    pub fn new(base: FinLattice, complete: FinLattice, embedding: Vec<usize>) -> Result<Self> {
        if embedding.len() != base.size() {
            return Err(Error::NotTotal {
                expected: base.size(),
                got: embedding.len(),
            });
        }
        if let Some((element, &image)) = embedding
            .iter()
            .enumerate()
            .find(|(_, &t)| t >= complete.size())
        {
            return Err(Error::OutOfRange { element, image });
        }
        if let Some((a, b)) = embedding_violation(&base, &complete, &embedding) {
            return Err(Error::NotAnEmbedding { a, b });
        }
        Ok(Completion {
            base,
            complete,
            embedding,
        })
    }

    pub fn identity(l: FinLattice) -> Self {
        let embedding = (0..l.size()).collect();
        Completion {
            base: l.clone(),
            complete: l,
            embedding,
        }
    }

    /// Same completion with `C`'s element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let complete = self.complete.relabel(perm)?;
        let embedding = self.embedding.iter().map(|&c| perm[c]).collect();
        Completion::new(self.base.clone(), complete, embedding)
    }

    pub fn base(&self) -> &FinLattice {
        &self.base
    }

    pub fn complete(&self) -> &FinLattice {
        &self.complete
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    fn image(&self, s: Bits) -> Bits {
        s.iter().map(|a| self.embedding[a]).collect()
    }
}

/// First pair breaking injectivity or meet/join preservation.
fn embedding_violation(
    base: &FinLattice,
    complete: &FinLattice,
    e: &[usize],
) -> Option<(usize, usize)> {
    let n = base.size();
    for a in 0..n {
        for b in 0..n {
            let broken = (a != b && e[a] == e[b])
                || e[base.meet(a, b)] != complete.meet(e[a], e[b])
                || e[base.join(a, b)] != complete.join(e[a], e[b]);
            if broken {
                return Some((a, b));
            }
        }
    }
    None
}

/// Every `c ∈ C` must be the join of the `⋀e[F]` below it and the meet of
/// the `⋁e[I]` above it, over all filters `F` and ideals `I` of the base.
pub fn is_dense(c: &Completion) -> Density {
    let cl = &c.complete;
    let filter_meets: Vec<usize> = all_filters(&c.base)
        .iter()
        .map(|f| cl.meet_all(c.image(f.members)))
        .collect();
    let ideal_joins: Vec<usize> = all_ideals(&c.base)
        .iter()
        .map(|i| cl.join_all(c.image(i.members)))
        .collect();
    for element in 0..cl.size() {
        let below: Bits = filter_meets
            .iter()
            .copied()
            .filter(|&m| cl.leq(m, element))
            .collect();
        if cl.join_all(below) != element {
            return Density::NotDense {
                element,
                side: DensitySide::Join,
            };
        }
        let above: Bits = ideal_joins
            .iter()
            .copied()
            .filter(|&j| cl.leq(element, j))
            .collect();
        if cl.meet_all(above) != element {
            return Density::NotDense {
                element,
                side: DensitySide::Meet,
            };
        }
    }
    Density::Dense
}

/// Whenever `⋀e[F] ≤ ⋁e[I]`, `F` and `I` must share an element.
pub fn is_compact(c: &Completion) -> Compactness {
    let cl = &c.complete;
    let ideals = all_ideals(&c.base);
    for filter in all_filters(&c.base) {
        let m = cl.meet_all(c.image(filter.members));
        for &ideal in &ideals {
            let j = cl.join_all(c.image(ideal.members));
            if cl.leq(m, j) && (filter.members & ideal.members).is_empty() {
                return Compactness::NotCompact { filter, ideal };
            }
        }
    }
    Compactness::Compact
}

/// A lattice isomorphism `σ: C1 -> C2` with `σ ∘ e1 = e2`, if one exists.
pub fn completion_isomorphic(c1: &Completion, c2: &Completion) -> Result<Option<Vec<usize>>> {
    if c1.base != c2.base {
        return Err(Error::BaseMismatch);
    }
    let (l1, l2) = (&c1.complete, &c2.complete);
    for l in [l1, l2] {
        if l.size() > MAX_ISO_SEARCH {
            return Err(Error::BoundExceeded {
                what: "completion isomorphism search",
                limit: MAX_ISO_SEARCH,
                got: l.size(),
            });
        }
    }
    if l1.size() != l2.size() {
        return Ok(None);
    }
    let n = l1.size();
    let mut assign: Vec<Option<usize>> = alloc::vec![None; n];
    let mut used = Bits::EMPTY;
    for (&x, &y) in c1.embedding.iter().zip(&c2.embedding) {
        match assign[x] {
            Some(prev) if prev != y => return Ok(None),
            Some(_) => {}
            None => {
                if used.contains(y) {
                    return Ok(None);
                }
                assign[x] = Some(y);
                used.insert(y);
            }
        }
    }
    let profile = |l: &FinLattice, x: usize| (l.poset().down(x).len(), l.poset().up(x).len());
    for (x, y) in assign.iter().enumerate() {
        if let &Some(y) = y {
            if profile(l1, x) != profile(l2, y) {
                return Ok(None);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if let (Some(a), Some(b)) = (assign[x], assign[y]) {
                if l1.leq(x, y) != l2.leq(a, b) {
                    return Ok(None);
                }
            }
        }
    }
    let free: Vec<usize> = (0..n).filter(|&x| assign[x].is_none()).collect();
    if extend_iso(l1, l2, &free, &mut assign, &mut used, &profile) {
        Ok(Some(
            assign.into_iter().map(|a| a.unwrap_or_default()).collect(),
        ))
    } else {
        Ok(None)
    }
}

fn extend_iso(
    l1: &FinLattice,
    l2: &FinLattice,
    free: &[usize],
    assign: &mut [Option<usize>],
    used: &mut Bits,
    profile: &impl Fn(&FinLattice, usize) -> (usize, usize),
) -> bool {
    let Some((&x, rest)) = free.split_first() else {
        return true;
    };
    for y in 0..l2.size() {
        if used.contains(y) || profile(l1, x) != profile(l2, y) {
            continue;
        }
        let consistent = (0..l1.size()).all(|z| match assign[z] {
            Some(w) => l1.leq(x, z) == l2.leq(y, w) && l1.leq(z, x) == l2.leq(w, y),
            None => true,
        });
        if !consistent {
            continue;
        }
        assign[x] = Some(y);
        used.insert(y);
        if extend_iso(l1, l2, rest, assign, used, profile) {
            return true;
        }
        assign[x] = None;
        *used = used.minus(Bits::singleton(y));
    }
    false
}

/// Every lattice embedding `base -> complete`, in lexicographic table order.
pub fn lattice_embeddings(base: &FinLattice, complete: &FinLattice) -> Result<Vec<Vec<usize>>> {
    if complete.size() > MAX_ISO_SEARCH {
        return Err(Error::BoundExceeded {
            what: "embedding search target",
            limit: MAX_ISO_SEARCH,
            got: complete.size(),
        });
    }
    let mut out = Vec::new();
    let mut table: Vec<Option<usize>> = alloc::vec![None; base.size()];
    search_embeddings(base, complete, 0, &mut table, &mut out);
    Ok(out)
}

fn search_embeddings(
    base: &FinLattice,
    complete: &FinLattice,
    next: usize,
    table: &mut [Option<usize>],
    out: &mut Vec<Vec<usize>>,
) {
    if next == base.size() {
        let t: Vec<usize> = table.iter().map(|x| x.unwrap_or_default()).collect();
        if embedding_violation(base, complete, &t).is_none() {
            out.push(t);
        }
        return;
    }
    for y in 0..complete.size() {
        let ok = (0..next).all(|a| {
            let Some(ya) = table[a] else { return true };
            ya != y
                && base.leq(a, next) == complete.leq(ya, y)
                && base.leq(next, a) == complete.leq(y, ya)
        });
        if !ok {
            continue;
        }
        table[next] = Some(y);
        search_embeddings(base, complete, next + 1, table, out);
        table[next] = None;
    }
}
