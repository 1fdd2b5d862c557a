use thiserror::Error;

/// Every failure the core can report. Element and point witnesses are
/// carrier indices of the structure being validated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inconsistent presentation: {0}")]
    Inconsistent(&'static str),
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("not a partial order: {a} <= {b} and {b} <= {a} with {a} != {b}")]
    NotAPoset { a: usize, b: usize },
    #[error("not a lattice: {a} and {b} have no {missing}")]
    NotALattice {
        a: usize,
        b: usize,
        missing: &'static str,
    },
    #[error(
        "not distributive: {a} meet ({b} join {c}) differs from ({a} meet {b}) join ({a} meet {c})"
    )]
    NotDistributive { a: usize, b: usize, c: usize },
    #[error("complement law fails at element {element}")]
    ComplementLawFails { element: usize },
    #[error("{what}: bound {limit} exceeded (got {got})")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("the one-element algebra has no ultrafilters")]
    DegenerateAlgebra,
    #[error("map table has {got} entries, expected {expected}")]
    NotTotal { expected: usize, got: usize },
    #[error("image {image} of element {element} is outside the target carrier")]
    OutOfRange { element: usize, image: usize },
    #[error("not order-preserving: {a} <= {b} but images are not ordered")]
    NotMonotone { a: usize, b: usize },
    #[error("bounds not preserved at element {element}")]
    NotBoundPreserving { element: usize },
    #[error("meet of {a} and {b} not preserved")]
    NotMeetPreserving { a: usize, b: usize },
    #[error("join of {a} and {b} not preserved")]
    NotJoinPreserving { a: usize, b: usize },
    #[error("complement of {element} not preserved")]
    NotComplementPreserving { element: usize },
    #[error("not a Stone space: {0}")]
    NotStone(&'static str),
    #[error("preimage of base set {base_set} is not open")]
    NotContinuous { base_set: usize },
    #[error("not a lattice embedding at ({a}, {b})")]
    NotAnEmbedding { a: usize, b: usize },
    #[error("image is not dense: point {point} lies outside its closure")]
    NotDense { point: usize },
    #[error("base space is empty")]
    EmptySpace,
    #[error("no continuous extension exists")]
    NoExtension,
    #[error("continuous extension is not unique ({count} candidates)")]
    ExtensionNotUnique { count: usize },
    #[error("diagram does not commute at point {point}")]
    CommutationFailure { point: usize },
    #[error("no clopen set has the preimage of subset {subset:?} as its image")]
    NoClopenPreimage { subset: u64 },
    #[error("completions are over different base lattices")]
    BaseMismatch,
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
