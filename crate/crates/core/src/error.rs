use alloc::string::String;

use crate::presentation::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("algebra is not finite dimensional within degree cap {0}")]
    NotFiniteDimensional(usize),
    #[error("relations are not admissible: the arrow ideal is not nilpotent modulo them")]
    NotAdmissible,
    #[error("dimension {required} exceeds the configured cap {cap}")]
    DimensionCapExceeded { required: usize, cap: usize },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("arrow set is empty")]
    EmptyArrowSet,
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("algebra has no originating presentation")]
    NoPresentation,
    #[error("certificate does not belong to this presentation")]
    CertificateMismatch,
    #[error("module does not belong to this cleft context")]
    ContextMismatch,
    #[error("internal consistency check failed: {0}")]
    CheckFailed(String),
}
