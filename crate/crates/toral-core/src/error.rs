use crate::rootsystem::ExceptionalType;

/// Errors reported by the library.
///
/// Everything here is an input error except [`Error::PhiImageNotRoot`] and
/// [`Error::ReductionDiverged`], which would indicate a bug in the root-system
/// data and must never fire on valid inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown type label `{0}` (expected one of G2, F4, E6, E7, E8)")]
    UnknownType(String),

    #[error("unknown search mode `{0}` (expected exhaustive, levi or pruned)")]
    UnknownMode(String),

    #[error("{0} is not a prime number")]
    NotPrime(i64),

    #[error("expected {expected} coordinates, got {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("coordinates have level {found}, expected sum b_i a_i = {expected}")]
    LevelMismatch { expected: i64, found: i64 },

    #[error("Kac coordinates must be nonnegative")]
    NegativeCoordinate,

    #[error("scalar must be a unit: r = {r} is not invertible modulo {p}")]
    NotAUnit { r: i64, p: i64 },

    #[error("tuples belong to different types or characteristics")]
    ClassMismatch,

    #[error("node {0} is out of range for this diagram")]
    NodeOutOfRange(usize),

    #[error("the required and forbidden node sets overlap")]
    OverlappingNodeSets,

    #[error("subgraph is empty or not connected")]
    NotConnected,

    #[error("levi mode needs a good prime, but {p} is bad for {ty}")]
    BadPrimeForLevi { ty: ExceptionalType, p: i64 },

    #[error("not a root subsystem: {0}")]
    NotASubsystem(String),

    #[error("subgraph image is not a positive root; root-system data is corrupt")]
    PhiImageNotRoot,

    #[error("alcove reduction exceeded its iteration cap; label data is corrupt")]
    ReductionDiverged,
}

pub type Result<T> = std::result::Result<T, Error>;
