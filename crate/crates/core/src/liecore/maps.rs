//! Quotients and subalgebras realised as standalone algebras, with the maps
//! moving vectors and subspaces between them and the parent.

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Subquotient, Subspace, Vector};

/// `L / I` on a basis of coset representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    sq: Subquotient,
}

impl Quotient {
    pub fn new(parent: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        parent.require_ideal(ideal)?;
        let sq = Subquotient::new(&parent.full(), ideal)?;
        let reps = sq.representatives().to_vec();
        let labels = reps
            .iter()
            .map(|r| {
                let p = r.iter().position(|x| !x.is_zero()).expect("nonzero rep");
                parent.labels()[p].clone()
            })
            .collect();
        let mut brackets = Vec::new();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                let b = parent.bracket(&reps[i], &reps[j]);
                brackets.push((i, j, sq.coords(&b)));
            }
        }
        let algebra = LieAlgebra::new(parent.field(), labels, brackets)?;
        Ok(Quotient { algebra, sq })
    }

    pub fn kernel(&self) -> &Subspace {
        self.sq.lower()
    }

    pub fn push_vector(&self, v: &[crate::exactla::Scalar]) -> Vector {
        self.sq.coords(v)
    }

    pub fn lift_vector(&self, c: &[crate::exactla::Scalar]) -> Vector {
        self.sq.lift(c)
    }

    /// `(U + I) / I`.
    pub fn push(&self, u: &Subspace) -> Subspace {
        self.sq.project_subspace(u)
    }

    /// Full preimage in the parent.
    pub fn pull(&self, s: &Subspace) -> Subspace {
        self.sq.lift_subspace(s)
    }
}

/// A subalgebra `S ⊆ L` as an algebra in its own right, on the canonical basis of `S`.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub algebra: LieAlgebra,
    space: Subspace,
}

impl Restriction {
    pub fn new(parent: &LieAlgebra, s: &Subspace) -> Result<Self> {
        parent.require_subalgebra(s)?;
        let basis = s.basis();
        let labels = s
            .pivots()
            .iter()
            .map(|&p| parent.labels()[p].clone())
            .collect();
        let mut brackets = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let b = parent.bracket(&basis[i], &basis[j]);
                let c = s
                    .coordinates(&b)
                    .ok_or_else(|| Error::NotSubalgebra(parent.format_subspace(s)))?;
                brackets.push((i, j, c));
            }
        }
        let algebra = LieAlgebra::new(parent.field(), labels, brackets)?;
        Ok(Restriction {
            algebra,
            space: s.clone(),
        })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn to_parent(&self, c: &[crate::exactla::Scalar]) -> Vector {
        self.space.combine(c)
    }

    /// Coordinates of a parent vector lying in `S`.
    pub fn to_sub(&self, v: &[crate::exactla::Scalar]) -> Option<Vector> {
        self.space.coordinates(v)
    }

    /// A subspace of the parent contained in `S`, in the subalgebra's coordinates.
    pub fn push(&self, u: &Subspace) -> Result<Subspace> {
        let vs = u
            .basis()
            .iter()
            .map(|v| {
                self.to_sub(v)
                    .ok_or_else(|| Error::input("subspace is not contained in the subalgebra"))
            })
            .collect::<Result<Vec<_>>>()?;
        self.algebra.span(vs)
    }

    pub fn pull(&self, s: &Subspace) -> Subspace {
        let vs = s.basis().iter().map(|c| self.to_parent(c)).collect();
        Subspace::span(self.space.field(), self.space.ambient_dim(), vs).expect("pull")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::matrix::unit_vector;
    use crate::exactla::FieldSpec;
    use crate::liecore::algebra::default_labels;

    fn heis(f: FieldSpec) -> LieAlgebra {
        LieAlgebra::new(f, default_labels(3), [(0, 1, unit_vector(f, 3, 2))]).unwrap()
    }

    #[test]
    fn heisenberg_mod_centre_is_abelian() {
        let h = heis(FieldSpec::RATIONALS);
        let q = Quotient::new(&h, &h.centre()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_abelian());
    }

    #[test]
    fn quotient_by_everything_is_zero() {
        let h = heis(FieldSpec::gf(2));
        let q = Quotient::new(&h, &h.full()).unwrap();
        assert_eq!(q.algebra.dim(), 0);
    }

    #[test]
    fn pull_push_adds_the_kernel() {
        let h = heis(FieldSpec::gf(3));
        let z = h.centre();
        let q = Quotient::new(&h, &z).unwrap();
        let u = Subspace::coordinate(h.field(), 3, [0]);
        assert_eq!(q.pull(&q.push(&u)), u.sum(&z));
    }

    #[test]
    fn non_ideal_quotient_rejected() {
        let h = heis(FieldSpec::gf(3));
        let u = Subspace::coordinate(h.field(), 3, [0]);
        assert!(matches!(Quotient::new(&h, &u), Err(Error::NotIdeal(_))));
    }

    #[test]
    fn restriction_roundtrip() {
        let h = heis(FieldSpec::RATIONALS);
        let s = Subspace::coordinate(h.field(), 3, [0, 2]);
        let r = Restriction::new(&h, &s).unwrap();
        assert!(r.algebra.is_abelian());
        assert_eq!(r.pull(&r.push(&s).unwrap()), s);
    }
}
