//! Command-line front end for `sigmabeta-core`: JSON documents describing
//! algebras and homomorphisms, verification reports and Graphviz export.

pub mod commands;
pub mod document;
pub mod dot;
mod error;
pub mod report;

pub use error::{exit, CliError};

/// The document used when no `--doc` is given.
pub const SAMPLE_DOCUMENT: &str = include_str!("../data/sample.json");
