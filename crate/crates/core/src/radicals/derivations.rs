use super::nil::{nilradical, solvable_radical};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace, Vector};
use crate::liecore::{LieAlgebra, Restriction};

/// A linear map `D` with `D[x,y] = [Dx,y] + [x,Dy]`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub matrix: Matrix,
}

impl Derivation {
    pub fn is_derivation_of(&self, l: &LieAlgebra) -> bool {
        let n = l.dim();
        let d = &self.matrix;
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let (ei, ej) = (l.basis_vector(i), l.basis_vector(j));
                let lhs = d.mul_vec(&l.basis_bracket(i, j));
                let a = l.bracket(&d.mul_vec(&ei), &ej);
                let b = l.bracket(&ei, &d.mul_vec(&ej));
                lhs.iter().zip(a.iter().zip(&b)).all(|(x, (y, z))| *x == y + z)
            })
        })
    }
}

/// A basis of `Der(L)`, from the Leibniz linear system in `n²` unknowns.
pub fn derivation_algebra(l: &LieAlgebra) -> Vec<Derivation> {
    let n = l.dim();
    let field = l.field();
    if n == 0 {
        return Vec::new();
    }
    let br: Vec<Vec<Vector>> = (0..n)
        .map(|a| (0..n).map(|b| l.basis_bracket(a, b)).collect())
        .collect();
    // Unknown D[r][k] sits at index r * n + k.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for r in 0..n {
                let mut row = vec![field.zero(); n * n];
                let mut nonzero = false;
                for k in 0..n {
                    let c = &br[i][j][k];
                    if !c.is_zero() {
                        row[r * n + k] = &row[r * n + k] + c;
                        nonzero = true;
                    }
                    let c = &br[k][j][r];
                    if !c.is_zero() {
                        row[k * n + i] = &row[k * n + i] - c;
                        nonzero = true;
                    }
                    let c = &br[i][k][r];
                    if !c.is_zero() {
                        row[k * n + j] = &row[k * n + j] - c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Subspace::full(field, n * n)
    } else {
        Matrix::from_rows(field, n * n, rows).expect("rows").kernel()
    };
    kernel
        .basis()
        .iter()
        .map(|v| {
            let rows = v.chunks(n).map(|r| r.to_vec()).collect();
            Derivation {
                matrix: Matrix::from_rows(field, n, rows).expect("square"),
            }
        })
        .collect()
}

/// Whether the ideal `i` is invariant under every derivation in `ders`.
pub fn is_invariant(i: &Subspace, ders: &[Derivation]) -> bool {
    ders.iter().all(|d| {
        i.basis()
            .iter()
            .all(|v| i.contains_vector(&d.matrix.mul_vec(v)).unwrap_or(false))
    })
}

/// Whether the ideal `i` is characteristic (invariant under `Der(L)`).
pub fn is_characteristic(l: &LieAlgebra, i: &Subspace) -> Result<bool> {
    l.require_ideal(i)?;
    Ok(is_invariant(i, &derivation_algebra(l)))
}

/// Largest subspace of `x` mapped into itself by all the matrices.
pub fn largest_invariant_subspace(x: &Subspace, maps: &[Matrix]) -> Subspace {
    let mut x = x.clone();
    loop {
        let mut next = x.clone();
        for m in maps {
            next = next.intersect(&x.preimage(m));
        }
        if next == x {
            return x;
        }
        x = next;
    }
}

/// The two readings of the characteristic radical `R_c(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharRadical {
    /// Sum of the solvable ideals of `S` invariant under `Der(S)`.
    pub of_s: Subspace,
    /// Sum of the solvable ideals of `L` inside `S` invariant under `Der(L)`.
    pub of_l: Subspace,
}

impl CharRadical {
    pub fn readings_agree(&self) -> bool {
        self.of_s == self.of_l
    }
}

pub fn characteristic_radical(l: &LieAlgebra, s: &Subspace, caps: &Caps) -> Result<CharRadical> {
    l.require_ideal(s)?;
    let r = Restriction::new(l, s)?;
    let rs = solvable_radical(&r.algebra, caps)?;
    let ders: Vec<Matrix> = derivation_algebra(&r.algebra)
        .into_iter()
        .map(|d| d.matrix)
        .collect();
    let of_s = r.pull(&largest_invariant_subspace(&rs, &ders));
    let rl = solvable_radical(l, caps)?.intersect(s);
    let ders_l: Vec<Matrix> = derivation_algebra(l).into_iter().map(|d| d.matrix).collect();
    let of_l = largest_invariant_subspace(&rl, &ders_l);
    Ok(CharRadical { of_s, of_l })
}

/// Characteristic 0: `C_L(N)²`, checked to satisfy `C_L(N) = Z(N) ⊕ C_L(N)²` with
/// the second summand an ideal of zero radical.
pub fn max_semisimple_ideal(l: &LieAlgebra, caps: &Caps) -> Result<Subspace> {
    if l.field().characteristic() != 0 {
        return Err(Error::Unsupported(
            "the maximal semisimple ideal is computed in characteristic 0 only".into(),
        ));
    }
    let n = nilradical(l, caps)?;
    let c = l.centraliser(&n)?;
    let b = l.product_space(&c, &c)?;
    let zn = Restriction::new(l, &n)?;
    let zn = zn.pull(&zn.algebra.centre());
    let split = zn.sum(&b) == c && zn.intersect(&b).is_zero();
    let r = Restriction::new(l, &b)?;
    let semisimple = solvable_radical(&r.algebra, caps)?.is_zero();
    if !split || !l.is_ideal(&b)? || !semisimple {
        return Err(Error::Certificate(format!(
            "C_L(N)² = {} does not split off C_L(N) as a semisimple ideal",
            l.format_subspace(&b)
        )));
    }
    Ok(b)
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

    #[test]
    fn abelian_derivations_are_everything() {
        let a = LieAlgebra::abelian(FieldSpec::RATIONALS, 3);
        assert_eq!(derivation_algebra(&a).len(), 9);
        let a2 = LieAlgebra::abelian(FieldSpec::gf(2), 2);
        let e1 = Subspace::coordinate(a2.field(), 2, [0]);
        assert!(!is_characteristic(&a2, &e1).unwrap());
    }

    #[test]
    fn heisenberg_derivations() {
        let h = heis(FieldSpec::RATIONALS);
        let ders = derivation_algebra(&h);
        assert_eq!(ders.len(), 6);
        assert!(ders.iter().all(|d| d.is_derivation_of(&h)));
        assert!(is_characteristic(&h, &h.centre()).unwrap());
    }

    #[test]
    fn inner_derivations_are_derivations() {
        let h = heis(FieldSpec::gf(5));
        for i in 0..3 {
            let d = Derivation {
                matrix: h.ad_basis(i).clone(),
            };
            assert!(d.is_derivation_of(&h));
        }
    }

    #[test]
    fn abelian_char_radical_is_everything() {
        let a = LieAlgebra::abelian(FieldSpec::gf(3), 2);
        let rc = characteristic_radical(&a, &a.full(), &Caps::default()).unwrap();
        assert!(rc.of_s.is_full() && rc.readings_agree());
    }
}
