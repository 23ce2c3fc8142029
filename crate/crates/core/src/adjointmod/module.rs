//! Finite-dimensional modules given by generator matrices, acting on column vectors.

use std::collections::HashSet;
use std::ops::ControlFlow;

use super::certify::{Certificate, Irreducibility};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::matrix::unit_vector;
use crate::exactla::subspace::for_each_projective_point;
use crate::exactla::{FieldSpec, Matrix, Subquotient, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    field: FieldSpec,
    dim: usize,
    gens: Vec<Matrix>,
}

/// Sum of the images of all homomorphisms from an irreducible module into a target.
#[derive(Clone, Debug)]
pub struct HomImages {
    /// Dimension of the Hom space.
    pub dim: usize,
    /// One image per basis element of the Hom space.
    pub images: Vec<Subspace>,
    pub total: Subspace,
}

/// The socle of a module: the sum of its minimal submodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSocle {
    pub socle: Subspace,
    pub minimal: Vec<Subspace>,
    /// Whether `minimal` lists every minimal submodule.
    pub complete: bool,
}

impl Module {
    pub fn new(field: FieldSpec, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        let mut kept: Vec<Matrix> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nrows() != dim || g.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.nrows().max(g.ncols()),
                });
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), g.field().to_string()));
            }
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Module {
            field,
            dim,
            gens: kept,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero generators, duplicates removed.
    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// Smallest submodule containing `vectors`.
    pub fn spin(&self, vectors: &[Vector]) -> Subspace {
        let mut out = Subspace::zero(self.field, self.dim);
        let mut frontier = Vec::new();
        for v in vectors {
            if out.insert(v) {
                frontier.push(v.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            if out.is_full() {
                break;
            }
            for g in &self.gens {
                let w = g.mul_vec(&v);
                if out.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        out
    }

    /// Spins `v`, recording for each new basis vector the parent index and the
    /// generator that produced it.
    pub(crate) fn spin_words(&self, v: &[crate::exactla::Scalar]) -> (Vec<Vector>, Vec<(usize, usize)>) {
        let mut span = Subspace::zero(self.field, self.dim);
        let mut basis = Vec::new();
        let mut words = Vec::new();
        if !span.insert(v) {
            return (basis, words);
        }
        basis.push(v.to_vec());
        let mut i = 0;
        while i < basis.len() {
            for (gi, g) in self.gens.iter().enumerate() {
                let w = g.mul_vec(&basis[i]);
                if span.insert(&w) {
                    basis.push(w);
                    words.push((i, gi));
                }
            }
            i += 1;
        }
        (basis, words)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.gens
            .iter()
            .all(|g| s.basis().iter().all(|v| s.contains_vector(&g.mul_vec(v)).unwrap_or(false)))
    }

    fn require_submodule(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        if !self.is_submodule(s) {
            return Err(Error::input("subspace is not a submodule"));
        }
        Ok(())
    }

    /// The action on `upper / lower`, both submodules, with the coordinate map.
    pub fn subquotient(&self, upper: &Subspace, lower: &Subspace) -> Result<(Module, Subquotient)> {
        self.require_submodule(upper)?;
        self.require_submodule(lower)?;
        let sq = Subquotient::new(upper, lower)?;
        let d = sq.dim();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vector> = sq
                    .representatives()
                    .iter()
                    .map(|r| sq.coords(&g.mul_vec(r)))
                    .collect();
                Matrix::from_columns(self.field, d, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((Module::new(self.field, d, gens)?, sq))
    }

    /// Transposed action, on the dual space.
    pub fn dual(&self) -> Module {
        Module {
            field: self.field,
            dim: self.dim,
            gens: self.gens.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn irreducibility(&self, caps: &Caps, salt: u64) -> Result<Irreducibility> {
        super::certify::irreducibility(self, caps, salt)
    }

    /// A composition series `0 = M_0 ⊂ … ⊂ M_r = V`.
    pub fn composition_series(&self, caps: &Caps, salt: u64) -> Result<Vec<Subspace>> {
        Ok(self.certified_composition_series(caps, salt)?.0)
    }

    /// A composition series together with the certificate for each factor.
    pub fn certified_composition_series(
        &self,
        caps: &Caps,
        salt: u64,
    ) -> Result<(Vec<Subspace>, Vec<Certificate>)> {
        let zero = Subspace::zero(self.field, self.dim);
        if self.dim == 0 {
            return Ok((vec![zero], Vec::new()));
        }
        match self.irreducibility(caps, salt)? {
            Irreducibility::Irreducible(c) => Ok((vec![zero, self.full()], vec![c])),
            Irreducibility::Reducible(u) => {
                let (sub, sq_low) = self.subquotient(&u, &zero)?;
                let (quo, sq_high) = self.subquotient(&self.full(), &u)?;
                let (low, mut certs) = sub.certified_composition_series(caps, salt.wrapping_add(1))?;
                let mut series: Vec<Subspace> = low.iter().map(|s| sq_low.lift_subspace(s)).collect();
                let (high, high_certs) = quo.certified_composition_series(caps, salt.wrapping_add(2))?;
                series.extend(high.iter().skip(1).map(|s| sq_high.lift_subspace(s)));
                certs.extend(high_certs);
                Ok((series, certs))
            }
            Irreducibility::Undetermined(why) => Err(Error::Capacity {
                what: format!("irreducibility certificate for a {}-dimensional module ({why})", self.dim),
                cap: caps.spin_seeds as u64,
            }),
        }
    }

    /// Images of all homomorphisms from `self` (which must be irreducible) into
    /// `target`. Both modules must be given by the same generating sequence.
    pub fn hom_images(&self, target: &Module) -> Result<HomImages> {
        if self.gens.len() != target.gens.len() {
            return Err(Error::input("modules are not over the same generating sequence"));
        }
        let t = self.dim;
        let n = target.dim;
        let field = self.field;
        let zero_target = Subspace::zero(field, n);
        if t == 0 {
            return Err(Error::input("zero module"));
        }
        let (basis, words) = self.spin_words(&unit_vector(field, t, 0));
        if basis.len() != t {
            return Err(Error::Certificate("source of hom_images is reducible".into()));
        }
        let wt = Matrix::from_columns(field, t, &basis)?;
        let mut w_mats = vec![Matrix::identity(field, n)];
        for &(parent, g) in &words {
            let gm = target.gen_or_zero(g);
            w_mats.push(gm.mul(&w_mats[parent])?);
        }
        let mut rows = Subspace::zero(field, n);
        'outer: for (gi, g) in self.gens.iter().enumerate() {
            let gv = target.gen_or_zero(gi);
            for (i, w) in basis.iter().enumerate() {
                let c = wt.solve(&g.mul_vec(w))?.expect("spin basis spans");
                let mut m = gv.mul(&w_mats[i])?;
                for (j, cj) in c.iter().enumerate() {
                    if !cj.is_zero() {
                        m.axpy(&-cj, &w_mats[j]);
                    }
                }
                for r in m.to_rows() {
                    rows.insert(&r);
                }
                if rows.is_full() {
                    break 'outer;
                }
            }
        }
        let kernel = rows.annihilator();
        let mut total = zero_target;
        let mut images = Vec::new();
        for v in kernel.basis() {
            let img = Subspace::span(field, n, w_mats.iter().map(|w| w.mul_vec(v)).collect())?;
            total = total.sum(&img);
            images.push(img);
        }
        Ok(HomImages {
            dim: kernel.dim(),
            images,
            total,
        })
    }

    fn gen_or_zero(&self, i: usize) -> Matrix {
        self.gens
            .get(i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.field, self.dim, self.dim))
    }

    /// Socle via homomorphisms from each composition factor.
    pub fn socle(&self, caps: &Caps, salt: u64) -> Result<ModuleSocle> {
        let zero = Subspace::zero(self.field, self.dim);
        if self.dim == 0 {
            return Ok(ModuleSocle {
                socle: zero,
                minimal: Vec::new(),
                complete: true,
            });
        }
        let series = self.composition_series(caps, salt)?;
        let mut components: Vec<Subspace> = Vec::new();
        let mut minimal = Vec::new();
        let mut complete = true;
        for pair in series.windows(2) {
            let (factor, _) = self.subquotient_raw(&pair[1], &pair[0])?;
            let hom = factor.hom_images(self)?;
            if hom.dim == 0 || components.contains(&hom.total) {
                continue;
            }
            let end = factor.hom_images(&factor)?.dim;
            if hom.dim == end {
                minimal.push(hom.total.clone());
            } else {
                complete = false;
                minimal.extend(hom.images.iter().cloned());
            }
            components.push(hom.total);
        }
        let socle = components.iter().fold(zero, |acc, c| acc.sum(c));
        let mut out = ModuleSocle {
            socle,
            minimal,
            complete,
        };
        if !out.complete {
            if let Some(full) = self.enumerate_minimal(&out.socle, caps)? {
                out.minimal = full;
                out.complete = true;
            }
        }
        dedup(&mut out.minimal);
        Ok(out)
    }

    /// Like [`Module::subquotient`] but keeps the generator indexing of `self`
    /// (zero generators included), as required by [`Module::hom_images`].
    pub(crate) fn subquotient_raw(&self, upper: &Subspace, lower: &Subspace) -> Result<(Module, Subquotient)> {
        let (mut m, sq) = self.subquotient(upper, lower)?;
        let d = sq.dim();
        m.gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vector> = sq
                    .representatives()
                    .iter()
                    .map(|r| sq.coords(&g.mul_vec(r)))
                    .collect();
                Matrix::from_columns(self.field, d, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((m, sq))
    }

    /// Every minimal submodule inside `within`, by spinning each projective
    /// point; `None` when the field is infinite or the count exceeds the cap.
    pub fn enumerate_minimal(&self, within: &Subspace, caps: &Caps) -> Result<Option<Vec<Subspace>>> {
        let Some(q) = self.field.order() else {
            return Ok(None);
        };
        let points = (q as f64).powi(within.dim() as i32);
        if points > caps.enum_cap as f64 {
            return Ok(None);
        }
        let mut seen: HashSet<Subspace> = HashSet::new();
        let mut sorted: Vec<Subspace> = Vec::new();
        for_each_projective_point(within, caps.enum_cap, |v| {
            let s = self.spin(&[v]);
            if seen.insert(s.clone()) {
                sorted.push(s);
            }
            ControlFlow::Continue(())
        })?;
        sorted.sort_by_key(Subspace::dim);
        let mut minimal: Vec<Subspace> = Vec::new();
        for s in sorted {
            if !minimal.iter().any(|m| m.dim() < s.dim() && s.contains(m)) {
                minimal.push(s);
            }
        }
        Ok(Some(minimal))
    }
}

fn dedup(v: &mut Vec<Subspace>) {
    let mut seen = HashSet::new();
    v.retain(|s| seen.insert(s.clone()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::gf(p)
    }

    /// The natural 2-dimensional module of the upper-triangular nilpotent matrix.
    fn jordan(f: FieldSpec) -> Module {
        let mut g = Matrix::zeros(f, 2, 2);
        g.set(0, 1, f.one());
        Module::new(f, 2, vec![g]).unwrap()
    }

    #[test]
    fn spin_and_submodules() {
        let m = jordan(gf(3));
        let e1 = unit_vector(gf(3), 2, 0);
        let e2 = unit_vector(gf(3), 2, 1);
        assert_eq!(m.spin(std::slice::from_ref(&e1)), Subspace::coordinate(gf(3), 2, [0]));
        assert!(m.spin(&[e2]).is_full());
        assert!(m.is_submodule(&Subspace::coordinate(gf(3), 2, [0])));
    }

    #[test]
    fn jordan_socle_is_the_line() {
        let m = jordan(gf(2));
        let s = m.socle(&Caps::default(), 0).unwrap();
        assert_eq!(s.socle, Subspace::coordinate(gf(2), 2, [0]));
        assert_eq!(s.minimal.len(), 1);
        assert!(s.complete);
        let series = m.composition_series(&Caps::default(), 0).unwrap();
        assert_eq!(series.len(), 3);
    }

    #[test]
    fn trivial_module_socle_lists_every_line() {
        let m = Module::new(gf(2), 2, vec![]).unwrap();
        let s = m.socle(&Caps::default(), 0).unwrap();
        assert!(s.socle.is_full());
        assert_eq!(s.minimal.len(), 3);
        assert!(s.complete);
    }
}
