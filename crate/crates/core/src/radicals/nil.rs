//! Nilradical and solvable radical.
//!
//! The nilradical is the intersection of the centralisers of the factors of any
//! chief series: it centralises every chief factor (Engel), and that
//! intersection acts nilpotently on `L`. In characteristic 0 the trace form of
//! the associative algebra generated by `ad L` gives it directly (its radical
//! is the Jacobson radical), so that route is preferred there.

use crate::adjointmod::chief_chain;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::liecore::{LieAlgebra, Quotient, Restriction};

/// Largest nilpotent ideal.
pub fn nilradical(l: &LieAlgebra, caps: &Caps) -> Result<Subspace> {
    let n = if l.is_nilpotent() {
        l.full()
    } else if l.field().characteristic() == 0 {
        nilradical_trace(l)?
    } else {
        nilradical_chief(l, caps)?
    };
    verify_nilpotent_ideal(l, &n)?;
    Ok(n)
}

/// Intersection of `C_L(A/B)` over a chief series.
pub fn nilradical_chief(l: &LieAlgebra, caps: &Caps) -> Result<Subspace> {
    let mut n = l.full();
    for (lower, upper, _) in chief_chain(l, &[], caps)? {
        n = n.intersect(&l.relative_centraliser(&upper, &lower)?);
    }
    Ok(n)
}

/// Associative algebra (with identity) generated by the given matrices, as
/// flattened vectors, together with a basis of matrices.
pub(crate) fn enveloping_algebra(gens: &[Matrix], d: usize) -> Result<Vec<Matrix>> {
    let field = gens.first().map(Matrix::field);
    let Some(field) = field else {
        return Ok(vec![]);
    };
    let mut span = Subspace::zero(field, d * d);
    let id = Matrix::identity(field, d);
    span.insert(id.entries());
    let mut basis = vec![id];
    let mut i = 0;
    while i < basis.len() {
        for g in gens {
            let w = g.mul(&basis[i])?;
            if span.insert(w.entries()) {
                basis.push(w);
            }
        }
        i += 1;
    }
    Ok(basis)
}

/// `tr(ab)` without forming the product.
pub(crate) fn trace_pairing(a: &Matrix, b: &Matrix) -> crate::exactla::Scalar {
    let d = a.nrows();
    let mut t = a.field().zero();
    for i in 0..d {
        for j in 0..d {
            let x = a.get(i, j);
            if !x.is_zero() {
                t = t.sub_mul(&-x, b.get(j, i));
            }
        }
    }
    t
}

/// Characteristic 0 only: `{x : ad x ∈ J(A)}` with `J(A)` the radical of the trace form.
pub fn nilradical_trace(l: &LieAlgebra) -> Result<Subspace> {
    let field = l.field();
    if field.characteristic() != 0 {
        return Err(Error::Unsupported(
            "the trace-form nilradical needs characteristic 0".into(),
        ));
    }
    let n = l.dim();
    let gens: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i).clone()).collect();
    if gens.iter().all(Matrix::is_zero) {
        return Ok(l.full());
    }
    let basis = enveloping_algebra(&gens, n)?;
    let m = basis.len();
    let mut gram = Matrix::zeros(field, m, m);
    for a in 0..m {
        for b in a..m {
            let t = trace_pairing(&basis[a], &basis[b]);
            gram.set(a, b, t.clone());
            gram.set(b, a, t);
        }
    }
    let radical_coords = gram.kernel();
    let mut jac = Subspace::zero(field, n * n);
    for c in radical_coords.basis() {
        let mut j = Matrix::zeros(field, n, n);
        for (coef, a) in c.iter().zip(&basis) {
            j.axpy(coef, a);
        }
        jac.insert(j.entries());
    }
    let cols: Vec<_> = gens.iter().map(|g| g.entries().to_vec()).collect();
    let ad_map = Matrix::from_columns(field, n * n, &cols)?;
    Ok(jac.preimage(&ad_map))
}

fn verify_nilpotent_ideal(l: &LieAlgebra, n: &Subspace) -> Result<()> {
    if !l.is_ideal(n)? || l.nilpotency_class(n)?.is_none() {
        return Err(Error::Certificate(format!(
            "computed nilradical {} is not a nilpotent ideal",
            l.format_subspace(n)
        )));
    }
    Ok(())
}

/// Largest solvable ideal.
pub fn solvable_radical(l: &LieAlgebra, caps: &Caps) -> Result<Subspace> {
    let r = if l.is_solvable() {
        l.full()
    } else if l.field().characteristic() == 0 {
        solvable_radical_killing(l)
    } else {
        solvable_radical_iterated(l, caps)?
    };
    if !l.is_ideal(&r)? || l.derived_length(&r)?.is_none() {
        return Err(Error::Certificate(format!(
            "computed radical {} is not a solvable ideal",
            l.format_subspace(&r)
        )));
    }
    Ok(r)
}

/// Characteristic 0: the Killing-orthogonal complement of `L²`.
pub fn solvable_radical_killing(l: &LieAlgebra) -> Subspace {
    let k = l.killing_matrix();
    let rows: Vec<_> = l
        .derived_algebra()
        .basis()
        .iter()
        .map(|y| k.mul_vec(y))
        .collect();
    if rows.is_empty() {
        return l.full();
    }
    Matrix::from_rows(l.field(), l.dim(), rows)
        .expect("rows")
        .kernel()
}

/// Any characteristic: `X_0 = 0`, `X_{k+1}/X_k = N(L/X_k)` until it stops growing.
pub fn solvable_radical_iterated(l: &LieAlgebra, caps: &Caps) -> Result<Subspace> {
    let mut x = l.zero_space();
    loop {
        let q = Quotient::new(l, &x)?;
        let n = nilradical(&q.algebra, caps)?;
        if n.is_zero() {
            return Ok(x);
        }
        x = q.pull(&n);
    }
}

/// `N(U)` for a subalgebra `U`, as a subspace of `L`.
pub fn nilradical_of(l: &LieAlgebra, u: &Subspace, caps: &Caps) -> Result<Subspace> {
    let r = Restriction::new(l, u)?;
    Ok(r.pull(&nilradical(&r.algebra, caps)?))
}

/// `R(U)` for a subalgebra `U`, as a subspace of `L`.
pub fn solvable_radical_of(l: &LieAlgebra, u: &Subspace, caps: &Caps) -> Result<Subspace> {
    let r = Restriction::new(l, u)?;
    Ok(r.pull(&solvable_radical(&r.algebra, caps)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::matrix::unit_vector;
    use crate::exactla::FieldSpec;
    use crate::liecore::default_labels;

    fn r2(f: FieldSpec) -> LieAlgebra {
        LieAlgebra::new(f, default_labels(2), [(0, 1, unit_vector(f, 2, 1))]).unwrap()
    }

    /// gl2 on the basis e11, e12, e21, e22.
    fn gl2() -> LieAlgebra {
        let f = FieldSpec::RATIONALS;
        let v = |c: &[i64]| c.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        LieAlgebra::new(
            f,
            default_labels(4),
            [
                (0, 1, v(&[0, 1, 0, 0])),
                (0, 2, v(&[0, 0, -1, 0])),
                (1, 2, v(&[1, 0, 0, -1])),
                (1, 3, v(&[0, 1, 0, 0])),
                (2, 3, v(&[0, 0, -1, 0])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn r2_radicals() {
        let l = r2(FieldSpec::gf(3));
        let caps = Caps::default();
        assert_eq!(nilradical(&l, &caps).unwrap(), Subspace::coordinate(l.field(), 2, [1]));
        assert_eq!(solvable_radical(&l, &caps).unwrap(), l.full());
    }

    #[test]
    fn gl2_nilradical_is_scalars() {
        let l = gl2();
        l.validate().unwrap();
        let caps = Caps::default();
        let scalars = l.span(vec![l.basis_vector(0).iter().zip(l.basis_vector(3)).map(|(a, b)| a + &b).collect()]).unwrap();
        assert_eq!(nilradical(&l, &caps).unwrap(), scalars);
        assert_eq!(nilradical_chief(&l, &caps).unwrap(), scalars);
        assert_eq!(solvable_radical(&l, &caps).unwrap(), scalars);
    }

    #[test]
    fn char0_routes_agree_on_r2() {
        let l = r2(FieldSpec::RATIONALS);
        let caps = Caps::default();
        assert_eq!(nilradical_trace(&l).unwrap(), nilradical_chief(&l, &caps).unwrap());
        assert_eq!(solvable_radical_killing(&l), l.full());
    }
}
