//! Generalised nilradicals: quasi-minimal components, `N†`, `N*`, `N̂`, `Ñ`,
//! their iterated series, and the registry of statements relating them.

pub mod analysis;
pub mod components;
pub mod report;
pub mod suite;
pub mod theorems;

pub use analysis::{Analysis, CentIntersection, NStar, NTilde, Series, SeriesKind};
pub use components::{centre_of, is_quasi_minimal, is_quasi_simple, is_simple_algebra, ComponentKind, ComponentSet};
pub use report::{Entry, Provenance, RadicalReport};
pub use suite::{run_suite, Summary, SuiteResult};
pub use theorems::{check_theorem, registry_ids, statement, Outcome, TheoremResult, REGISTRY};
