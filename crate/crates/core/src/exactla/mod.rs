//! Exact linear algebra over ℚ and prime fields.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::{Matrix, Vector};
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{Subquotient, Subspace};
