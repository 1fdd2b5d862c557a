//! Stone-Čech compactification of finite discrete spaces as `P(X)_*`, the
//! extension of maps along it, and the compactification order.

mod compactification;
mod space;

pub use compactification::{
    compactification_equivalent, compactification_leq, Compactification, CompactificationKind,
};
pub use space::{
    beta_extend_to_compact, beta_lift, beta_preserves, beta_space, BetaSpace, MapProperty,
    Preservation, MAX_BETA_POINTS,
};
