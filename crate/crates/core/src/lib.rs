//! Exact computations for finite-dimensional triassociative algebras.
//!
//! Algebras are given by structure constants over ℚ or a prime field. The
//! crate computes the usual structural invariants, second cohomology with
//! trivial coefficients, the Schur multiplier and covers, the subspace
//! `Z*(L)`, and checks the exact sequences relating these objects on
//! concrete inputs.
//!
//! ```
//! use triassoc::catalog;
//! use triassoc::exactlin::Field;
//!
//! let l = catalog::abelian(Field::Rational, 2);
//! let h = triassoc::cohomology::h2(&l, 1).unwrap();
//! assert_eq!(h.h2_dim, 12);
//! ```

pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod exactlin;
pub mod extensions;
pub mod io;
pub mod sequences;
pub mod trialgebra;

pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Scalar, Subspace};
pub use trialgebra::{Op, TriAlgebra};
