use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("structure constants are not associative at basis triple ({i}, {j}, {k}), output coordinate {l}")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid derivation kind: {0}")]
    InvalidKind(String),

    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("element is not in the ideal")]
    IotaNotInIdeal,

    #[error("polynomial degree {degree} exceeds the factoring cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("no nilpotency certificate with exponent at most {cap}")]
    NilpotencyCapExceeded { cap: usize },

    #[error("no separating central element found after {retries} random attempts")]
    SeparatingElementNotFound { retries: usize },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("unknown builtin algebra `{0}`")]
    UnknownBuiltin(String),

    #[error("bad size parameter for `{name}`: {reason}")]
    BadSize { name: String, reason: String },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
