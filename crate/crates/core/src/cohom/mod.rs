//! Representations, twist-compatible cochains, the coboundary operator and
//! cohomology groups `H^k(g; V)` for `k >= 1`.

mod cochain;
mod complex;
mod rep;

pub use cochain::{binomial, increasing_tuples, tuple_index, Cochain};
pub use complex::{coboundary_with, cochain_space, cohomology, Cohomology};
pub use rep::{restrict_to_center, RepWitness, Representation};
pub(crate) use rep::rho_of;
