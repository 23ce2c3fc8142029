use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::nil::nilradical;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::subspace::{for_each_subspace, gaussian_binomial};
use crate::exactla::Subspace;
use crate::liecore::LieAlgebra;

/// Total number of proper nonzero subspaces of `L`, saturating.
pub fn proper_subspace_count(l: &LieAlgebra) -> Option<u128> {
    let q = l.field().order()?;
    let n = l.dim();
    Some(
        (1..n)
            .map(|k| gaussian_binomial(q, n, k))
            .fold(0u128, |a, b| a.saturating_add(b)),
    )
}

fn enumeration_allowed(l: &LieAlgebra, caps: &Caps) -> Result<()> {
    match proper_subspace_count(l) {
        None => Err(Error::Unsupported(
            "subalgebra enumeration needs a finite field".into(),
        )),
        Some(c) if c > caps.subspace_cap as u128 => Err(Error::Capacity {
            what: format!("{c} subspaces of a {}-dimensional algebra over {}", l.dim(), l.field()),
            cap: caps.subspace_cap,
        }),
        Some(_) => Ok(()),
    }
}

/// Subalgebra test that stops at the first bracket leaving `s`; most
/// enumerated subspaces fail on the first pair.
fn closed(l: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| {
        (i + 1..b.len()).all(|j| s.contains_vector(&l.bracket(&b[i], &b[j])).unwrap_or(false))
    })
}

/// All maximal proper subalgebras, by enumerating subspaces from the top down.
pub fn maximal_subalgebras(l: &LieAlgebra, caps: &Caps) -> Result<Vec<Subspace>> {
    enumeration_allowed(l, caps)?;
    let n = l.dim();
    let mut maximal: Vec<Subspace> = Vec::new();
    for k in (0..n).rev() {
        let mut found = Vec::new();
        for_each_subspace(l.field(), n, k, caps.subspace_cap, |s| {
            if closed(l, &s) && !maximal.iter().any(|m| m.contains(&s)) {
                found.push(s);
            }
            ControlFlow::Continue(())
        })?;
        maximal.extend(found);
    }
    Ok(maximal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrattiniMethod {
    /// `L` nilpotent: `φ(L) = L²`.
    Nilpotent,
    /// `φ(L) ⊆ N ∩ L²`, which vanishes.
    TrivialBound,
    /// Intersection of all maximal subalgebras.
    Enumeration,
    /// Supplied by the caller; checked only against `φ(L) ⊆ N ∩ L²`.
    Hinted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frattini {
    /// Intersection of maximal subalgebras, when known.
    pub subalgebra: Option<Subspace>,
    pub ideal: Subspace,
    pub phi_free: bool,
    pub method: FrattiniMethod,
}

impl Frattini {
    fn new(subalgebra: Option<Subspace>, ideal: Subspace, method: FrattiniMethod) -> Self {
        Frattini {
            subalgebra,
            phi_free: ideal.is_zero(),
            ideal,
            method,
        }
    }
}

/// Frattini subalgebra (intersection of maximal subalgebras) by enumeration.
pub fn frattini_subalgebra(l: &LieAlgebra, caps: &Caps) -> Result<Subspace> {
    let maximal = maximal_subalgebras(l, caps)?;
    Ok(maximal.iter().fold(l.full(), |acc, m| acc.intersect(m)))
}

/// `φ(L)`, the largest ideal inside every maximal subalgebra.
pub fn frattini(l: &LieAlgebra, caps: &Caps, hint: Option<&Subspace>) -> Result<Frattini> {
    if l.is_nilpotent() {
        let d = l.derived_algebra();
        return Ok(Frattini::new(Some(d.clone()), d, FrattiniMethod::Nilpotent));
    }
    let bound = match nilradical(l, caps) {
        Ok(n) => Some(n.intersect(&l.derived_algebra())),
        Err(e) if e.is_capacity() => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = &bound {
        if b.is_zero() {
            return Ok(Frattini::new(None, b.clone(), FrattiniMethod::TrivialBound));
        }
    }
    match frattini_subalgebra(l, caps) {
        Ok(f) => {
            let phi = l.core(&f)?;
            return Ok(Frattini::new(Some(f), phi, FrattiniMethod::Enumeration));
        }
        Err(e) if e.is_capacity() && hint.is_some() => {}
        Err(e) => return Err(e),
    }
    let h = hint.expect("checked above");
    l.require_ideal(h)?;
    if let Some(b) = &bound {
        if !b.contains(h) {
            return Err(Error::Certificate(format!(
                "hinted Frattini ideal {} is not inside N ∩ L²",
                l.format_subspace(h)
            )));
        }
    }
    Ok(Frattini::new(None, h.clone(), FrattiniMethod::Hinted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::matrix::unit_vector;
    use crate::exactla::FieldSpec;
    use crate::liecore::default_labels;

    fn heis(f: FieldSpec) -> LieAlgebra {
        LieAlgebra::new(f, default_labels(3), [(0, 1, unit_vector(f, 3, 2))]).unwrap()
    }

    fn r2(f: FieldSpec) -> LieAlgebra {
        LieAlgebra::new(f, default_labels(2), [(0, 1, unit_vector(f, 2, 1))]).unwrap()
    }

    #[test]
    fn r2_gf2_maximals_are_the_three_lines() {
        let l = r2(FieldSpec::gf(2));
        let m = maximal_subalgebras(&l, &Caps::default()).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|s| s.dim() == 1));
    }

    #[test]
    fn heisenberg_gf2() {
        let h = heis(FieldSpec::gf(2));
        let m = maximal_subalgebras(&h, &Caps::default()).unwrap();
        assert_eq!(m.len(), 3);
        let z = h.centre();
        assert!(m.iter().all(|s| s.dim() == 2 && s.contains(&z)));
        assert_eq!(frattini_subalgebra(&h, &Caps::default()).unwrap(), z);
        let f = frattini(&h, &Caps::default(), None).unwrap();
        assert_eq!(f.ideal, z);
        assert_eq!(f.method, FrattiniMethod::Nilpotent);
    }

    #[test]
    fn abelian_and_r2_are_phi_free() {
        let a = LieAlgebra::abelian(FieldSpec::gf(2), 3);
        assert!(frattini(&a, &Caps::default(), None).unwrap().phi_free);
        assert!(frattini_subalgebra(&a, &Caps::default()).unwrap().is_zero());
        let l = r2(FieldSpec::gf(3));
        assert!(frattini(&l, &Caps::default(), None).unwrap().phi_free);
    }

    #[test]
    fn char0_enumeration_unsupported() {
        let l = r2(FieldSpec::RATIONALS);
        assert!(matches!(
            maximal_subalgebras(&l, &Caps::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
