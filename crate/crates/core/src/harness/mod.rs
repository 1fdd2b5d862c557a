//! Diagram chase, per-instance verification and the exhaustive suite.

pub mod diagram;
mod report;
mod shrink;
mod suite;
mod verify;

pub use diagram::{build_diagram, double_dual_map, preimage_membership_witness, DiagramBundle};
pub use report::{
    Check, InstanceKey, InstanceKind, InstanceReport, Verdict, VerificationReport, Witness,
};
pub use shrink::{shrink_instance, HomInstance};
pub use suite::{
    exhaustive_suite, suite_instances, verify_instance, Instance, SamplePolicy, MONOTONE_ATOMS,
};
pub use verify::{
    hom_descriptor, hom_key, verify_algebra, verify_beta_map, verify_corollary, verify_hom,
    verify_main_theorem, verify_monotone, FAMILY_CHECK_POINTS,
};
