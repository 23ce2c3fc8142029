//! Classical radicals: nilradical, solvable radical, derivations,
//! characteristic radical, regularity and the Frattini ideal.

pub mod derivations;
pub mod frattini;
pub mod nil;
pub mod regularity;

pub use derivations::{
    characteristic_radical, derivation_algebra, is_characteristic, is_invariant,
    largest_invariant_subspace, max_semisimple_ideal, CharRadical, Derivation,
};
pub use frattini::{frattini, frattini_subalgebra, maximal_subalgebras, Frattini, FrattiniMethod};
pub use nil::{
    nilradical, nilradical_chief, nilradical_of, nilradical_trace, solvable_radical,
    solvable_radical_iterated, solvable_radical_killing, solvable_radical_of,
};
pub use regularity::{regularity, RegularityVerdict};
