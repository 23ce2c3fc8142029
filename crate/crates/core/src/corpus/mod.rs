//! Named constructions, the shipped fixtures and the algebra document format.

pub mod builders;
pub mod doc;
pub mod registry;

pub use doc::{load, save, AlgebraDoc, Expected, Fixture, Hints};
