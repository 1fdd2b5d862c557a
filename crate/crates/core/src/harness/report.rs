use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// An implication whose premise does not hold.
    Vacuous,
}

/// Concrete data locating a failure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Witness {
    /// Atom counts of the source and target algebras.
    pub algebra_sizes: Option<(usize, usize)>,
    pub hom_table: Option<Vec<usize>>,
    /// Offending subset `A`, as a bitmask over ultrafilter indices.
    pub subset: Option<u64>,
    /// Offending point (ultrafilter or element index, per check).
    pub point: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    /// Exploratory checks are recorded but never fail a run.
    pub asserted: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: &'static str) -> Self {
        Check {
            name,
            verdict: Verdict::Pass,
            asserted: true,
            witness: None,
        }
    }

    pub fn fail(name: &'static str, witness: Witness) -> Self {
        Check {
            name,
            verdict: Verdict::Fail,
            asserted: true,
            witness: Some(witness),
        }
    }

    pub fn vacuous(name: &'static str) -> Self {
        Check {
            name,
            verdict: Verdict::Vacuous,
            asserted: true,
            witness: None,
        }
    }

    pub fn from_result(name: &'static str, r: Result<(), Witness>) -> Self {
        match r {
            Ok(()) => Check::pass(name),
            Err(w) => Check::fail(name, w),
        }
    }

    pub fn exploratory(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn is_failure(&self) -> bool {
        self.asserted && self.verdict == Verdict::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InstanceKind {
    Algebra,
    Hom,
    BetaMap,
    Monotone,
}

/// Sort key: kind, then the instance's defining numbers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InstanceKey {
    pub kind: InstanceKind,
    pub data: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InstanceReport {
    pub key: InstanceKey,
    pub descriptor: String,
    pub checks: Vec<Check>,
    /// Filled in by callers that can read a clock.
    pub timing_ms: Option<u64>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::is_failure)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VerificationReport {
    pub instances: Vec<InstanceReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(InstanceReport::passed)
    }

    pub fn count(&self, kind: InstanceKind) -> usize {
        self.instances.iter().filter(|i| i.key.kind == kind).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = (&InstanceReport, &Check)> {
        self.instances.iter().flat_map(|i| {
            i.checks
                .iter()
                .filter(|c| c.is_failure())
                .map(move |c| (i, c))
        })
    }

    pub fn sort(&mut self) {
        self.instances.sort_by(|a, b| a.key.cmp(&b.key));
    }
}
