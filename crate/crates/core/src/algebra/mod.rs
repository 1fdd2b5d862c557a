//! Finite posets, lattices and Boolean algebras.

mod boolean;
mod filters;
mod hom;
mod lattice;
mod poset;

pub(crate) use boolean::mask_label;
pub use boolean::{
    atoms, powerset_algebra, validate_boolean_algebra, FinBoolAlg, Presentation, MAX_ATOMS,
};
pub use filters::{
    all_filters, all_ideals, filters_brute_force, ideals_brute_force, is_filter, is_ideal,
    ultrafilter_from_members, ultrafilters, ultrafilters_brute_force, Filter, Ideal, UltraFilter,
    BRUTE_FORCE_CARRIER,
};
pub use hom::{all_homs, hom_from_atom_map, validate_hom, BoolHom, MonotoneMap, MAX_HOM_ATOMS};
pub use lattice::FinLattice;
pub use poset::FinPoset;
