//! Completions, the density and compactness tests, the canonical extension
//! `⟨P(Uf(B)), φ⟩` and the σ-extension of maps.

mod completion;
mod extension;
mod sigma;

pub use completion::{
    completion_isomorphic, is_compact, is_dense, lattice_embeddings, Compactness, Completion,
    Density, DensitySide, MAX_ISO_SEARCH,
};
pub use extension::{canonical_extension, CanonicalExtension};
pub use sigma::{sigma_extend, SigmaExtension};
