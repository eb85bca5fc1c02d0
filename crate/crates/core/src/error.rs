use thiserror::Error;

pub use crate::extend::ExtensionReport;
use crate::homlie::ValidationReport;

/// The two short exact sequences whose diagonality the obstruction theory
/// relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandingSequence {
    /// `0 -> Inn(h) -> Der(h) -> Out(h) -> 0`
    DerivationsOverOuter,
    /// `0 -> Cen(h) -> h -> Inn(h) -> 0`
    CenterOverInner,
}

impl std::fmt::Display for StandingSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StandingSequence::DerivationsOverOuter => write!(f, "0 -> Inn(h) -> Der(h) -> Out(h) -> 0"),
            StandingSequence::CenterOverInner => write!(f, "0 -> Cen(h) -> h -> Inn(h) -> 0"),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{0} is singular")]
    Singular(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported cochain degree {0}")]
    UnsupportedDegree(usize),
    #[error("invalid Hom-Lie algebra: {0}")]
    InvalidAlgebra(ValidationReport),
    #[error("invalid extension data: {0}")]
    InvalidExtensionData(ExtensionReport),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("not diagonal over Q: {0}")]
    NotDiagonal(String),
    #[error("standing sequence not diagonal over Q: {0}")]
    StandingSequence(StandingSequence),
    #[error("homomorphism is not extensible; obstruction class coordinates {0:?}")]
    NotExtensible(Vec<String>),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
