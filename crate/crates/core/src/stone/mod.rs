//! The functors between finite Boolean algebras and finite Stone spaces.

mod embedding;
mod functor;
mod representation;

pub use embedding::{dual_space, phi, phi_table};
pub use functor::{dual_map, hat_phi, hat_phi_in};
pub use representation::{
    clopen_algebra, dual_of_continuous, stone_representation, ClopenAlgebra, StoneIso,
};
