//! Structure-constant Lie algebras.

pub mod algebra;
pub mod handle;
pub mod maps;

pub use algebra::{default_labels, format_vector, LieAlgebra};
pub use handle::SubAlgHandle;
pub use maps::{Quotient, Restriction};
