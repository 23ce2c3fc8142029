//! The adjoint action: modules, irreducibility certificates, minimal ideals,
//! socles and chief series.

pub mod certify;
pub mod ideals;
pub mod module;

pub use certify::{Certificate, Irreducibility};
pub use ideals::{
    action_module, chief_chain, chief_series, factor_centraliser, factor_kind, induces_inner, inner_ideal,
    is_irreducible_adjoint, l_socle, minimal_ideals, socle_between, spin, ChiefFactor, FactorKind,
    Regime, RegimeTag, SocleReport,
};
pub use module::{HomImages, Module, ModuleSocle};
