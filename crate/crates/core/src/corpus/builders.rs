//! Named constructions of Lie algebras.

use crate::error::{Error, Result};
use crate::exactla::matrix::{unit_vector, zero_vector};
use crate::exactla::{FieldSpec, Matrix, Subspace, Vector};
use crate::liecore::{default_labels, LieAlgebra};

fn vector(field: FieldSpec, n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = zero_vector(field, n);
    for &(k, c) in terms {
        v[k] = &v[k] + &field.from_i64(c);
    }
    v
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn abelian(field: FieldSpec, n: usize) -> LieAlgebra {
    LieAlgebra::abelian(field, n)
}

/// `[e1, e2] = e2`.
pub fn r2(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::new(field, default_labels(2), [(0, 1, unit_vector(field, 2, 1))])
        .expect("r2")
}

/// `[x, y] = z`.
pub fn heisenberg(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::new(field, labels(&["x", "y", "z"]), [(0, 1, unit_vector(field, 3, 2))])
        .expect("heisenberg")
}

/// `[e1, e_i] = e_{i+1}` for `2 ≤ i ≤ n-1`.
pub fn filiform(field: FieldSpec, n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::input("filiform algebras need dimension at least 3"));
    }
    let brackets = (1..n - 1).map(|i| (0, i, unit_vector(field, n, i + 1)));
    LieAlgebra::new(field, default_labels(n), brackets)
}

/// Basis `e, h, f` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::new(
        field,
        labels(&["e", "h", "f"]),
        [
            (0, 1, vector(field, 3, &[(0, -2)])),
            (0, 2, vector(field, 3, &[(1, 1)])),
            (1, 2, vector(field, 3, &[(2, -2)])),
        ],
    )
    .expect("sl2")
}

/// Matrix units `e11, e12, e21, e22`.
pub fn gl2(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::new(
        field,
        labels(&["e11", "e12", "e21", "e22"]),
        [
            (0, 1, vector(field, 4, &[(1, 1)])),
            (0, 2, vector(field, 4, &[(2, -1)])),
            (1, 2, vector(field, 4, &[(0, 1), (3, -1)])),
            (1, 3, vector(field, 4, &[(1, 1)])),
            (2, 3, vector(field, 4, &[(2, -1)])),
        ],
    )
    .expect("gl2")
}

/// The seven-dimensional table over GF(7) with the nine products
/// `[e2,e1]=e4, [e3,e1]=e5, [e3,e2]=e5, [e4,e3]=-e6, [e5,e1]=e7,
/// [e5,e2]=2e6, [e5,e4]=e7, [e6,e1]=e7, [e6,e2]=e7`, exactly as listed.
/// The table is returned unvalidated: it violates the Jacobi identity on
/// `(e1, e2, e3)`, so [`bokut7`] reports a validation error.
pub fn bokut7_table() -> LieAlgebra {
    let f = FieldSpec::gf(7);
    let v = |t: &[(usize, i64)]| vector(f, 7, t);
    LieAlgebra::new(
        f,
        default_labels(7),
        [
            (1, 0, v(&[(3, 1)])),
            (2, 0, v(&[(4, 1)])),
            (2, 1, v(&[(4, 1)])),
            (3, 2, v(&[(5, -1)])),
            (4, 0, v(&[(6, 1)])),
            (4, 1, v(&[(5, 2)])),
            (4, 3, v(&[(6, 1)])),
            (5, 0, v(&[(6, 1)])),
            (5, 1, v(&[(6, 1)])),
        ],
    )
    .expect("table shape")
}

/// The validated seven-dimensional table (see [`bokut7_table`]).
pub fn bokut7() -> Result<LieAlgebra> {
    bokut7_table().validated()
}

/// Lie algebra of matrices generated by the given square matrices under commutators,
/// on the canonical basis of its span.
pub fn matrix_closure(field: FieldSpec, gens: &[Matrix], names: Option<Vec<String>>) -> Result<LieAlgebra> {
    let d = gens.first().map(Matrix::nrows).unwrap_or(0);
    let mut span = Subspace::zero(field, d * d);
    let mut elems: Vec<Matrix> = Vec::new();
    for g in gens {
        if span.insert(g.entries()) {
            elems.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elems.len() {
        for j in 0..i {
            let c = elems[i].commutator(&elems[j])?;
            if span.insert(c.entries()) {
                elems.push(c);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let coords = |m: &Matrix| span.coordinates(m.entries()).expect("closed under brackets");
    let basis: Vec<Matrix> = span
        .basis()
        .iter()
        .map(|v| Matrix::from_rows(field, d, v.chunks(d).map(|r| r.to_vec()).collect()).expect("square"))
        .collect();
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            brackets.push((a, b, coords(&basis[a].commutator(&basis[b])?)));
        }
    }
    let names = names.unwrap_or_else(|| default_labels(n));
    if names.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: names.len(),
        });
    }
    LieAlgebra::new(field, names, brackets)?.validated()
}

/// A seven-dimensional nilpotent algebra over GF(7) of class 5 and derived
/// length 3: the Lie algebra generated by the 6×6 shift matrix and one
/// further strictly upper-triangular matrix.
pub fn nil7() -> LieAlgebra {
    let f = FieldSpec::gf(7);
    let mut x = Matrix::zeros(f, 6, 6);
    for i in 0..5 {
        x.set(i, i + 1, f.one());
    }
    let mut y = Matrix::zeros(f, 6, 6);
    for (i, j, c) in [(0, 1, 6), (1, 4, 5), (2, 4, 2), (4, 5, 4)] {
        y.set(i, j, f.from_i64(c));
    }
    matrix_closure(f, &[x, y], None).expect("nil7")
}

/// Exponent vectors of the monomial basis of `O_m = F[x_1..x_m]/(x_i^p)`.
fn monomials(m: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0..p).map(move |e| {
                    let mut b = a.clone();
                    b.push(e);
                    b
                })
            })
            .collect();
    }
    out.sort_by_key(|a| (a.iter().sum::<usize>(), a.clone()));
    out
}

fn monomial_label(alpha: &[usize]) -> String {
    let mut s = String::new();
    for (i, &e) in alpha.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let var = if alpha.len() == 1 {
            "x".to_string()
        } else {
            format!("x{}", i + 1)
        };
        s.push_str(&var);
        if e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

/// `S ⊗ O_m` over GF(p), basis `s_a x^α` with monomials in increasing degree.
pub fn trunc_tensor(s: &LieAlgebra, m: usize, p: u32) -> Result<LieAlgebra> {
    let field = FieldSpec::new(p as u64)?;
    if s.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
    }
    if m == 0 {
        return Err(Error::input("truncated polynomial algebra needs m ≥ 1"));
    }
    let mons = monomials(m, p as usize);
    if mons.len().saturating_mul(s.dim()) > 4096 {
        return Err(Error::Capacity {
            what: "truncated tensor dimension".into(),
            cap: 4096,
        });
    }
    let index_of = |alpha: &[usize]| mons.iter().position(|b| b == alpha);
    let nm = mons.len();
    let n = s.dim() * nm;
    // basis index: (monomial, s-basis) with monomial-major order
    let idx = |mono: usize, a: usize| mono * s.dim() + a;
    let mut lbls = Vec::with_capacity(n);
    for alpha in &mons {
        for l in s.labels() {
            let ml = monomial_label(alpha);
            lbls.push(if ml.is_empty() { l.clone() } else { format!("{l}.{ml}") });
        }
    }
    let mut brackets = Vec::new();
    for (u, alpha) in mons.iter().enumerate() {
        for (w, beta) in mons.iter().enumerate() {
            let prod: Vec<usize> = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
            let Some(t) = (prod.iter().all(|&e| e < p as usize)).then(|| index_of(&prod)).flatten() else {
                continue;
            };
            for (&(a, b), v) in s.table() {
                let mut out = zero_vector(field, n);
                for (k, c) in v.iter().enumerate() {
                    out[idx(t, k)] = c.clone();
                }
                brackets.push((idx(u, a), idx(w, b), out));
            }
        }
    }
    let _ = nm;
    LieAlgebra::new(field, lbls, brackets)
}

/// `sl2 ⊗ O_1 + F·(1 ⊗ D)` over GF(p) with `D = (1+x) d/dx`.
pub fn pasha(p: u32, m: usize) -> Result<LieAlgebra> {
    if m != 1 {
        return Err(Error::Unsupported(
            "the derivation (1+x)d/dx is defined here for one indeterminate only".into(),
        ));
    }
    let field = FieldSpec::new(p as u64)?;
    if p < 3 {
        return Err(Error::input("p must be an odd prime"));
    }
    let base = trunc_tensor(&sl2(field), 1, p)?;
    let nb = base.dim();
    let n = nb + 1;
    let pad = |v: &Vector| {
        let mut w = v.clone();
        w.push(field.zero());
        w
    };
    let mut brackets: Vec<(usize, usize, Vector)> =
        base.table().iter().map(|(&(i, j), v)| (i, j, pad(v))).collect();
    // [D, s x^k] = k s x^{k-1} + k s x^k
    for k in 0..p as usize {
        for a in 0..3 {
            let mut out = zero_vector(field, n);
            let c = field.from_i64(k as i64);
            if k > 0 {
                out[(k - 1) * 3 + a] = c.clone();
                out[k * 3 + a] = c;
            }
            brackets.push((nb, k * 3 + a, out));
        }
    }
    let mut lbls = base.labels().to_vec();
    lbls.push("D".into());
    LieAlgebra::new(field, lbls, brackets)?.validated()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_validate() {
        for f in [FieldSpec::RATIONALS, FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(5)] {
            r2(f).validate().unwrap();
            heisenberg(f).validate().unwrap();
            sl2(f).validate().unwrap();
            gl2(f).validate().unwrap();
            filiform(f, 6).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn bokut7_table_fails_jacobi_on_first_triple() {
        match bokut7() {
            Err(Error::Jacobi { triple, residual }) => {
                assert_eq!(triple, (1, 2, 3));
                assert_eq!(residual, "4e6 + e7");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nil7_invariants() {
        let l = nil7();
        assert_eq!(l.dim(), 7);
        assert_eq!(l.nilpotency_class(&l.full()).unwrap(), Some(5));
        assert_eq!(l.derived_length(&l.full()).unwrap(), Some(3));
    }

    #[test]
    fn trunc_tensor_shape() {
        let f = FieldSpec::gf(5);
        let t = trunc_tensor(&sl2(f), 1, 5).unwrap();
        assert_eq!(t.dim(), 15);
        t.validate().unwrap();
        assert_eq!(t.derived_algebra(), t.full());
    }

    #[test]
    fn pasha_dimension() {
        let l = pasha(7, 1).unwrap();
        assert_eq!(l.dim(), 22);
        assert!(pasha(7, 2).is_err());
    }
}
