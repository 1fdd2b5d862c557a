use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    all_homs, hom_from_atom_map, powerset_algebra, BoolHom, FinBoolAlg, MonotoneMap, MAX_HOM_ATOMS,
};
use crate::beta::MAX_BETA_POINTS;
use crate::error::{Error, Result};
use crate::harness::report::{InstanceReport, VerificationReport, Witness};
use crate::harness::shrink::{shrink_instance, HomInstance};
use crate::harness::verify::{verify_algebra, verify_beta_map, verify_hom, verify_monotone};
use crate::topology::all_maps;

/// Monotone non-homomorphisms are enumerated only up to this many atoms
/// (`2^(2^k)` candidate tables per side).
pub const MONOTONE_ATOMS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplePolicy {
    Exhaustive,
    /// `count` homomorphisms drawn with replacement from a ChaCha8 stream.
    Seeded {
        seed: u64,
        count: usize,
    },
}

#[derive(Debug, Clone)]
pub enum Instance {
    Algebra(Arc<FinBoolAlg>),
    Hom(BoolHom),
    BetaMap { y_len: usize, f: Vec<usize> },
    Monotone(MonotoneMap),
}

pub fn verify_instance(instance: &Instance) -> Result<InstanceReport> {
    match instance {
        Instance::Algebra(b) => verify_algebra(b),
        Instance::Hom(h) => {
            let mut report = verify_hom(h)?;
            attach_minimal(h, &mut report);
            Ok(report)
        }
        Instance::BetaMap { y_len, f } => verify_beta_map(*y_len, f),
        Instance::Monotone(m) => verify_monotone(m),
    }
}

/// Appends the smallest still-failing instance to each failed witness.
fn attach_minimal(h: &BoolHom, report: &mut InstanceReport) {
    let Ok(start) = HomInstance::of(h) else {
        return;
    };
    for check in report.checks.iter_mut().filter(|c| c.is_failure()) {
        let name = check.name;
        let minimal = shrink_instance(start.clone(), |c| {
            c.build()
                .and_then(|h| verify_hom(&h))
                .is_ok_and(|r| r.check(name).is_some_and(|c| c.is_failure()))
        });
        let w = check.witness.get_or_insert_with(Witness::default);
        w.detail = format!("{}; minimal failing instance: {minimal}", w.detail);
    }
}

fn powersets(max_atoms: usize) -> Result<Vec<Arc<FinBoolAlg>>> {
    (1..=max_atoms)
        .map(|k| powerset_algebra(k).map(Arc::new))
        .collect()
}

/// Every instance the suite runs, in report order.
pub fn suite_instances(max_atoms: usize, policy: SamplePolicy) -> Result<Vec<Instance>> {
    if max_atoms == 0 {
        return Err(Error::Inconsistent("the suite needs at least one atom"));
    }
    if max_atoms > MAX_HOM_ATOMS {
        return Err(Error::BoundExceeded {
            what: "suite atom count",
            limit: MAX_HOM_ATOMS,
            got: max_atoms,
        });
    }
    let algebras = powersets(max_atoms)?;
    let mut out: Vec<Instance> = algebras.iter().cloned().map(Instance::Algebra).collect();

    match policy {
        SamplePolicy::Exhaustive => {
            for b1 in &algebras {
                for b2 in &algebras {
                    out.extend(all_homs(b1, b2)?.into_iter().map(Instance::Hom));
                }
            }
        }
        SamplePolicy::Seeded { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let k1 = rng.random_range(1..=max_atoms);
                let k2 = rng.random_range(1..=max_atoms);
                let atom_map: Vec<usize> = (0..k2).map(|_| rng.random_range(0..k1)).collect();
                let h = hom_from_atom_map(
                    algebras[k1 - 1].clone(),
                    algebras[k2 - 1].clone(),
                    &atom_map,
                )?;
                out.push(Instance::Hom(h));
            }
        }
    }

    let points = max_atoms.min(MAX_BETA_POINTS);
    for x_len in 1..=points {
        for y_len in 1..=points {
            out.extend(all_maps(x_len, y_len)?.map(|f| Instance::BetaMap { y_len, f }));
        }
    }

    let small = &algebras[..max_atoms.min(MONOTONE_ATOMS)];
    for b1 in small {
        for b2 in small {
            for table in all_maps(b1.size(), b2.size())? {
                if let Ok(m) = MonotoneMap::new(b1.clone(), b2.clone(), table) {
                    if m.to_hom().is_err() {
                        out.push(Instance::Monotone(m));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs [`suite_instances`] and collects the reports, sorted by instance key.
pub fn exhaustive_suite(max_atoms: usize, policy: SamplePolicy) -> Result<VerificationReport> {
    let instances = suite_instances(max_atoms, policy)?
        .iter()
        .map(verify_instance)
        .collect::<Result<_>>()?;
    let mut report = VerificationReport { instances };
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::InstanceKind;

    #[test]
    fn counts_at_two_atoms() {
        let r = exhaustive_suite(2, SamplePolicy::Exhaustive).unwrap();
        assert!(r.passed());
        assert_eq!(r.count(InstanceKind::Algebra), 2);
        // 1 + 2 + 1 + 4 homomorphisms
        assert_eq!(r.count(InstanceKind::Hom), 8);
        // 1 + 2 + 1 + 4 maps between 1- and 2-point sets
        assert_eq!(r.count(InstanceKind::BetaMap), 8);
        assert!(r.count(InstanceKind::Monotone) > 0);
    }

    #[test]
    fn seeded_is_deterministic() {
        let policy = SamplePolicy::Seeded { seed: 7, count: 12 };
        let a = exhaustive_suite(3, policy).unwrap();
        let b = exhaustive_suite(3, policy).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.count(InstanceKind::Hom), 12);
    }

    #[test]
    fn bounds() {
        assert!(suite_instances(0, SamplePolicy::Exhaustive).is_err());
        assert!(matches!(
            suite_instances(5, SamplePolicy::Exhaustive),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
