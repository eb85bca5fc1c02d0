//! Diagonal non-abelian extensions `h -> total -> g`: extension data and
//! their validation, the total algebra, isomorphism, and the obstruction
//! and classification theory relative to `Out(h)` and `Cen(h)`.

mod build;
mod classify;
mod data;
mod iso;
mod lift;
mod obstruction;

pub use build::{build_extension, build_extension_unchecked, extract_data, ExtensionAlgebra, RawExtension};
pub use classify::{bijection_center_zero, classify, CenterFreeCorrespondence, Classification};
pub use data::{validate_extension_data, ExtensionData, ExtensionReport, ExtensionViolation};
pub use iso::{check_iso_witness, isomorphic, transport};
pub use lift::{
    center_splittings, construct_omega, induced_out_morphism, lift_out_morphism, CenterSplitting, OutMorphism,
};
pub use obstruction::{der_section, obstruction, obstruction_with, ObstructionResult};
