//! Finite-scale Stone duality, canonical extensions and Stone-Čech lifts.
//!
//! The crate builds every object in the chain
//!
//! ```text
//! B --(.)_*--> Uf(B) --β--> β(Uf(B)) --(.)^*--> P(Uf(B))
//! ```
//!
//! for finite Boolean algebras and a homomorphism `h: B1 -> B2`, computes the
//! extended map `P(Uf(B1)) -> P(Uf(B2))` by two independent routes (the
//! filter-quantified union formula and the dual of the Stone-Čech lift of
//! `h_*`) and checks exhaustively that they agree.
//!
//! The crate is `no_std` and only needs `alloc`. IO, documents and the CLI
//! live in the `sigmabeta` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod beta;
pub mod bits;
pub mod canext;
mod error;
pub mod harness;
pub mod stone;
pub mod topology;

pub use bits::Bits;
pub use error::{Error, Result};
