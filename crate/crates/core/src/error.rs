use thiserror::Error;

use crate::exterior::SpaceId;

/// Errors raised by library operations.
///
/// Identity failures are never errors; they are recorded in a
/// [`ValidationReport`](crate::report::ValidationReport). Errors are reserved
/// for violated preconditions and malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("space mismatch: {left} vs {right}")]
    SpaceMismatch { left: SpaceId, right: SpaceId },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("tensor rank {rank} outside the supported range {min}..={max}")]
    TensorRank { rank: usize, min: usize, max: usize },

    #[error("cochain degree overflow: degree {degree} exceeds dimension {dim}")]
    DegreeOverflow { degree: usize, dim: usize },

    #[error("expected a homogeneous element of grade {expected}")]
    GradeMismatch { expected: usize },

    #[error("bracket is not a Lie bracket: Jacobi fails on basis triple ({}, {}, {})", .triple[0] + 1, .triple[1] + 1, .triple[2] + 1)]
    NotLie { triple: [usize; 3] },

    #[error("structure is not a valid Lie quasi-bialgebra: {failed}")]
    InvalidStructure { failed: String },

    #[error("symmetric part is not ad-invariant (fails for basis element {}){}", .index + 1, if *.antisymmetric_invariant { "; the antisymmetric part is invariant" } else { "" })]
    NotInvariant { index: usize, antisymmetric_invariant: bool },

    #[error("complement is not isotropic: <u{}, u{}> = {value}", .pair[0] + 1, .pair[1] + 1)]
    NotIsotropic { pair: [usize; 2], value: String },

    #[error("subspace is not a complement of G in the double")]
    NotComplementary,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
