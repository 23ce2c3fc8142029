//! Brute-force recomputation of radicals by enumerating every subspace.
//! Only small algebras over finite fields; used to cross-check the main
//! algorithms.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::adjointmod::{minimal_ideals, Regime};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::subspace::{for_each_subspace, gaussian_binomial};
use crate::exactla::Subspace;
use crate::liecore::LieAlgebra;
use crate::radicals::{frattini, nilradical, solvable_radical};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Nilradical,
    Radical,
    Frattini,
    Socle,
    MinimalIdeals,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::Nilradical,
        Target::Radical,
        Target::Frattini,
        Target::Socle,
        Target::MinimalIdeals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Nilradical => "nilradical",
            Target::Radical => "radical",
            Target::Frattini => "frattini",
            Target::Socle => "socle",
            Target::MinimalIdeals => "minimal-ideals",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::input(format!("unknown oracle target `{s}`")))
    }
}

/// Every subspace of `L` with the subalgebras and ideals marked.
pub struct Lattice {
    pub subalgebras: Vec<Subspace>,
    pub ideals: Vec<Subspace>,
}

impl Lattice {
    pub fn enumerate(l: &LieAlgebra, caps: &Caps) -> Result<Self> {
        let q = l.field().order().ok_or_else(|| {
            Error::Unsupported("the oracle enumerates subspaces and needs a finite field".into())
        })?;
        let n = l.dim();
        let total = (0..=n)
            .map(|k| gaussian_binomial(q, n, k))
            .fold(0u128, |a, b| a.saturating_add(b));
        if total > caps.subspace_cap as u128 {
            return Err(Error::Capacity {
                what: format!("{total} subspaces for the oracle"),
                cap: caps.subspace_cap,
            });
        }
        let mut subalgebras = Vec::new();
        let mut ideals = Vec::new();
        for k in 0..=n {
            let mut err = None;
            for_each_subspace(l.field(), n, k, caps.subspace_cap, |s| {
                match (l.is_subalgebra(&s), l.is_ideal(&s)) {
                    (Ok(sub), Ok(id)) => {
                        if id {
                            ideals.push(s.clone());
                        }
                        if sub {
                            subalgebras.push(s);
                        }
                        ControlFlow::Continue(())
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        err = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
        }
        Ok(Lattice { subalgebras, ideals })
    }

    fn sum_where(&self, l: &LieAlgebra, pred: impl Fn(&Subspace) -> bool) -> Subspace {
        self.ideals
            .iter()
            .filter(|i| pred(i))
            .fold(l.zero_space(), |acc, i| acc.sum(i))
    }

    /// Sum of all nilpotent ideals.
    pub fn nilradical(&self, l: &LieAlgebra) -> Subspace {
        self.sum_where(l, |i| matches!(l.nilpotency_class(i), Ok(Some(_))))
    }

    /// Sum of all solvable ideals.
    pub fn radical(&self, l: &LieAlgebra) -> Subspace {
        self.sum_where(l, |i| matches!(l.derived_length(i), Ok(Some(_))))
    }

    /// Largest ideal inside the intersection of the maximal subalgebras.
    pub fn frattini(&self, l: &LieAlgebra) -> Subspace {
        let proper: Vec<&Subspace> = self.subalgebras.iter().filter(|s| !s.is_full()).collect();
        let maximal = proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.dim() > s.dim() && t.contains(s)));
        let f = maximal.fold(l.full(), |acc, m| acc.intersect(m));
        self.sum_where(l, |i| f.contains(i))
    }

    /// Nonzero ideals containing no smaller nonzero ideal.
    pub fn minimal_ideals(&self) -> Vec<Subspace> {
        let nonzero: Vec<&Subspace> = self.ideals.iter().filter(|i| !i.is_zero()).collect();
        nonzero
            .iter()
            .filter(|i| !nonzero.iter().any(|j| j.dim() < i.dim() && i.contains(j)))
            .map(|i| (*i).clone())
            .collect()
    }

    pub fn socle(&self, l: &LieAlgebra) -> Subspace {
        self.minimal_ideals()
            .iter()
            .fold(l.zero_space(), |acc, i| acc.sum(i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub target: Target,
    pub oracle: String,
    pub main: String,
    pub agree: bool,
}

fn sorted(mut v: Vec<Subspace>) -> Vec<Subspace> {
    v.sort_by_key(|s| format!("{:?}", s.basis()));
    v
}

/// Recomputes each target by enumeration and compares it with the library.
pub fn compare(l: &LieAlgebra, targets: &[Target], caps: &Caps) -> Result<Vec<Comparison>> {
    let lat = Lattice::enumerate(l, caps)?;
    let mut out = Vec::new();
    for &t in targets {
        let one = |a: Subspace, b: Subspace| Comparison {
            target: t,
            oracle: l.format_subspace(&a),
            main: l.format_subspace(&b),
            agree: a == b,
        };
        out.push(match t {
            Target::Nilradical => one(lat.nilradical(l), nilradical(l, caps)?),
            Target::Radical => one(lat.radical(l), solvable_radical(l, caps)?),
            Target::Frattini => one(lat.frattini(l), frattini(l, caps, None)?.ideal),
            Target::Socle => one(
                lat.socle(l),
                minimal_ideals(l, &Regime::Exhaustive, caps)?.socle,
            ),
            Target::MinimalIdeals => {
                let a = sorted(lat.minimal_ideals());
                let b = sorted(minimal_ideals(l, &Regime::Exhaustive, caps)?.minimal_ideals);
                let show = |v: &[Subspace]| {
                    v.iter().map(|s| l.format_subspace(s)).collect::<Vec<_>>().join(" ")
                };
                Comparison {
                    target: t,
                    oracle: show(&a),
                    main: show(&b),
                    agree: a == b,
                }
            }
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builders::{heisenberg, r2, sl2};
    use crate::exactla::FieldSpec;

    #[test]
    fn r2_gf3_agrees() {
        let l = r2(FieldSpec::gf(3));
        let cmp = compare(&l, &Target::ALL, &Caps::default()).unwrap();
        assert!(cmp.iter().all(|c| c.agree), "{cmp:?}");
    }

    #[test]
    fn heisenberg_frattini_is_centre() {
        let l = heisenberg(FieldSpec::gf(2));
        let lat = Lattice::enumerate(&l, &Caps::default()).unwrap();
        assert_eq!(lat.frattini(&l), l.centre());
    }

    #[test]
    fn rationals_unsupported() {
        let err = Lattice::enumerate(&sl2(FieldSpec::RATIONALS), &Caps::default());
        assert!(matches!(err, Err(Error::Unsupported(_))));
    }
}
