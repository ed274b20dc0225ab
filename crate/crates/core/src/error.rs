use thiserror::Error;

use crate::exactlin::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("subspace is not contained in the target subspace")]
    NotContained,

    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),

    #[error("algebra fails the triassociative identities ({violations} violations, first at axiom {first_axiom})")]
    Unvalidated { violations: usize, first_axiom: usize },

    #[error("subspaces belong to different algebras")]
    ParentMismatch,

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not central: basis vector [{vector}] does not annihilate the algebra")]
    NotCentral { vector: String },

    #[error("triple is not a 2-cocycle: violated conditions {axioms:?}")]
    CocycleViolation { axioms: Vec<usize> },

    #[error("map is not a section of the projection")]
    NotASection,

    #[error("parse error: {0}")]
    Parse(String),
}
