//! Deterministic exact linear algebra over ℚ and 𝔽ₚ.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub(crate) use matrix::{check_field, Echelon};
pub use scalar::{Field, Scalar, MAX_PRIME};
pub use subspace::{QuotientMap, Subspace};
