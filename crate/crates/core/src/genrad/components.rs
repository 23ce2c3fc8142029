//! Quasi-minimal and quasi-simple ideals.

use serde::{Deserialize, Serialize};

use crate::adjointmod::{is_irreducible_adjoint, Irreducibility};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::liecore::{LieAlgebra, Quotient, Restriction};

fn undetermined(what: &str, why: String, caps: &Caps) -> Error {
    Error::Capacity {
        what: format!("{what} ({why})"),
        cap: caps.spin_seeds as u64,
    }
}

/// `Z(A) = A ∩ C_L(A)` for an ideal `A`.
pub fn centre_of(l: &LieAlgebra, a: &Subspace) -> Result<Subspace> {
    Ok(a.intersect(&l.centraliser(a)?))
}

fn check_nonzero_ideal(l: &LieAlgebra, a: &Subspace) -> Result<()> {
    if a.is_zero() {
        return Err(Error::input("the zero ideal has no quasi-minimality verdict"));
    }
    l.require_ideal(a)
}

/// Nonzero, non-abelian, and without proper nonzero ideals. A nonzero
/// algebra with no proper ideal counts as its own minimal ideal, so this is
/// exactly "irreducible adjoint module" for non-abelian algebras.
pub fn is_simple_algebra(m: &LieAlgebra, caps: &Caps) -> Result<bool> {
    if m.dim() == 0 || m.is_abelian() {
        return Ok(false);
    }
    match is_irreducible_adjoint(m, &m.full(), caps)? {
        Irreducibility::Irreducible(_) => Ok(true),
        Irreducibility::Reducible(_) => Ok(false),
        Irreducibility::Undetermined(why) => Err(undetermined("simplicity", why, caps)),
    }
}

/// `A² = A` and `A / Z(A)` is a minimal ideal of `L / Z(A)`.
pub fn is_quasi_minimal(l: &LieAlgebra, a: &Subspace, caps: &Caps) -> Result<bool> {
    check_nonzero_ideal(l, a)?;
    if l.product_space(a, a)? != *a {
        return Ok(false);
    }
    let z = centre_of(l, a)?;
    let q = Quotient::new(l, &z)?;
    let image = q.push(a);
    if image.is_zero() {
        return Ok(false);
    }
    match is_irreducible_adjoint(&q.algebra, &image, caps)? {
        Irreducibility::Irreducible(_) => Ok(true),
        Irreducibility::Reducible(_) => Ok(false),
        Irreducibility::Undetermined(why) => Err(undetermined("quasi-minimality", why, caps)),
    }
}

/// `A² = A` and `A / Z(A)` is simple.
pub fn is_quasi_simple(l: &LieAlgebra, a: &Subspace, caps: &Caps) -> Result<bool> {
    check_nonzero_ideal(l, a)?;
    if l.product_space(a, a)? != *a {
        return Ok(false);
    }
    let r = Restriction::new(l, a)?;
    let z = r.algebra.centre();
    let q = Quotient::new(&r.algebra, &z)?;
    is_simple_algebra(&q.algebra, caps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    MComp,
    SComp,
}

/// Quasi-minimal (or quasi-simple) components and their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSet {
    pub kind: ComponentKind,
    pub components: Vec<Subspace>,
    /// `E†` or `Ê`.
    pub span: Subspace,
    /// Whether any component was accepted on the strength of a hint.
    pub hinted: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builders::{gl2, r2, sl2};
    use crate::exactla::FieldSpec;

    #[test]
    fn sl2_inside_gl2() {
        let l = gl2(FieldSpec::RATIONALS);
        let caps = Caps::default();
        let s = l.derived_algebra();
        assert_eq!(s.dim(), 3);
        assert!(is_quasi_minimal(&l, &s, &caps).unwrap());
        assert!(is_quasi_simple(&l, &s, &caps).unwrap());
    }

    #[test]
    fn abelian_ideal_of_r2_is_neither() {
        let l = r2(FieldSpec::gf(3));
        let e2 = Subspace::coordinate(l.field(), 2, [1]);
        let caps = Caps::default();
        assert!(!is_quasi_minimal(&l, &e2, &caps).unwrap());
        assert!(!is_quasi_simple(&l, &e2, &caps).unwrap());
        assert!(is_quasi_minimal(&l, &l.zero_space(), &caps).is_err());
    }

    #[test]
    fn simplicity() {
        let caps = Caps::default();
        assert!(is_simple_algebra(&sl2(FieldSpec::gf(5)), &caps).unwrap());
        assert!(!is_simple_algebra(&r2(FieldSpec::gf(5)), &caps).unwrap());
    }
}
