//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("ideal does not have finite colength")]
    NotFiniteColength,
    #[error("ideal is the unit ideal; a proper ideal is required")]
    NotProper,
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("no generator has support inside {0}")]
    EmptyRestriction(String),
    #[error("dimension {dim} exceeds the supported maximum {max} for this operation")]
    UnsupportedDimension { dim: usize, max: usize },
    #[error("gauge is infinite: the ray never meets the Newton polyhedron")]
    InfiniteGauge,
    #[error("Hilbert function did not stabilize below base {cap}; this signals a bug")]
    StabilizationCap { cap: u32 },
    #[error("reduction number search exceeded its termination cap {cap}; this signals a bug")]
    ReductionCap { cap: u32 },
    #[error("malformed linear program: {0}")]
    MalformedProgram(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
