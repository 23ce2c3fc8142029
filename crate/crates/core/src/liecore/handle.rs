use super::algebra::LieAlgebra;
use crate::error::Result;
use crate::exactla::Subspace;

/// A subspace of a parent algebra together with its closure flags.
#[derive(Clone, Debug)]
pub struct SubAlgHandle<'a> {
    pub parent: &'a LieAlgebra,
    pub space: Subspace,
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub is_perfect: bool,
}

impl<'a> SubAlgHandle<'a> {
    pub fn new(parent: &'a LieAlgebra, space: Subspace) -> Result<Self> {
        let sq = parent.product_space(&space, &space)?;
        let is_subalgebra = space.contains(&sq);
        let is_perfect = sq == space;
        let is_ideal = parent.is_ideal(&space)?;
        Ok(SubAlgHandle {
            parent,
            space,
            is_subalgebra,
            is_ideal,
            is_perfect,
        })
    }

    pub fn whole(parent: &'a LieAlgebra) -> Self {
        Self::new(parent, parent.full()).expect("full space")
    }

    pub fn nilpotency_class(&self) -> Result<Option<usize>> {
        self.parent.nilpotency_class(&self.space)
    }

    pub fn derived_length(&self) -> Result<Option<usize>> {
        self.parent.derived_length(&self.space)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    #[test]
    fn flags_of_whole_abelian_algebra() {
        let a = LieAlgebra::abelian(FieldSpec::gf(2), 2);
        let h = SubAlgHandle::whole(&a);
        assert!(h.is_subalgebra && h.is_ideal && !h.is_perfect);
        let z = SubAlgHandle::new(&a, a.zero_space()).unwrap();
        assert!(z.is_perfect);
    }
}
