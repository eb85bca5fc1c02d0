//! Exact computations with finite-dimensional regular Hom-Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactla`]: exact linear algebra (solving, kernels, canonical subspaces,
//!   quotients).
//! - [`homlie`]: Hom-Lie algebras, axiom validation, morphisms, centers and the
//!   twisted `gl(V)` structure.
//! - [`derived`]: derivations, inner and outer derivations, invariant
//!   complements and diagonal sections.
//! - [`cohom`]: representations, twisted cochains, the coboundary operator and
//!   cohomology.
//! - [`extend`]: diagonal non-abelian extensions, their isomorphism problem, and
//!   the obstruction/classification theory.
//!
//! All algorithms are generic over an exact [`Scalar`] field. The aliases below
//! fix the field to arbitrary-precision rationals, which is what the CLI uses.

pub mod cohom;
pub mod derived;
mod error;
pub mod exactla;
pub mod extend;
pub mod homlie;
pub mod sample;
mod scalar;

pub use error::{Error, Result, StandingSequence};
pub use scalar::Scalar;

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;
/// Fixed-width rationals; fast, but panics on overflow.
pub type Q64 = num_rational::Rational64;

pub type QMatrix = exactla::Matrix<Q>;
pub type QSubspace = exactla::Subspace<Q>;
pub type QHomLie = homlie::HomLieAlgebra<Q>;
pub type QRepresentation = cohom::Representation<Q>;
pub type QCochain = cohom::Cochain<Q>;
pub type QExtensionData = extend::ExtensionData<Q>;
