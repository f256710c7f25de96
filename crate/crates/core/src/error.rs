use thiserror::Error;

use crate::rootsys::{Root, Weight};

/// Errors raised by the engine. Indices inside variants are 0-based; the CLI
/// converts them to 1-based labels for display.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid simple type {letter}{rank}: {reason}")]
    InvalidType {
        letter: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {0} is singular")]
    SingularWeight(Weight),

    #[error("shifted weight {0} + gamma is singular")]
    SingularShiftedWeight(Weight),

    #[error("weight {0} is not integral")]
    NonIntegralWeight(Weight),

    #[error("weight {weight} is not dominant on Sigma: coordinate {index} is negative")]
    NotSigmaDominant { weight: Weight, index: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("{0} is not a positive root of this system")]
    NotPositiveRoot(Root),

    #[error("roots {lower} and {upper} are not comparable")]
    NotComparable { lower: Root, upper: Root },

    #[error("simple root {0} lies in Sigma")]
    AlphaInSigma(usize),

    #[error("Sigma contains every simple root; G/P is a point")]
    SigmaIsFull,

    #[error("invalid (A,B) configuration: {0}")]
    InvalidConfig(String),

    #[error("{0} is not an (A,B)-root")]
    NotABRoot(Root),

    #[error("A u B' contains a multiple edge between {0} and {1}")]
    NotSimplyLacedConfig(usize, usize),

    #[error("condition (AB) fails at simple root {index}: {reason}")]
    ConditionABViolated { index: usize, reason: &'static str },

    #[error("oracle violation at weight {weight}: {detail}")]
    OracleViolation { weight: Weight, detail: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
