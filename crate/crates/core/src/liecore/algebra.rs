use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactla::matrix::{axpy, is_zero_vector, unit_vector, zero_vector};
use crate::exactla::{FieldSpec, Matrix, Scalar, Subspace, Vector};

/// A finite-dimensional Lie algebra given by structure constants on a fixed basis.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the diagonal and lower
/// triangle follow by alternation. Construction checks shapes only — call
/// [`LieAlgebra::validate`] for the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    table: BTreeMap<(usize, usize), Vector>,
    ad: Vec<Matrix>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Renders `v` as a combination of labelled basis vectors, e.g. `2e1 - e3`.
pub fn format_vector(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c.field() == FieldSpec::RATIONALS && c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            let s = abs.to_string();
            if s.contains('/') {
                let _ = write!(out, "({s})");
            } else {
                out.push_str(&s);
            }
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl LieAlgebra {
    /// Builds an algebra from `[e_i, e_j] = v` for `i < j`. Pairs given with
    /// `i > j` are stored negated; `i == j` must bracket to zero.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut table: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (i, j, v) in brackets {
            if i >= n || j >= n {
                return Err(Error::input(format!(
                    "bracket index ({i}, {j}) out of range for dimension {n}"
                )));
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
            }
            if i == j {
                if !is_zero_vector(&v) {
                    return Err(Error::input(format!("[e{0}, e{0}] must be zero", i + 1)));
                }
                continue;
            }
            let (key, v) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), v.iter().map(|x| -x).collect())
            };
            let entry = table.entry(key).or_insert_with(|| zero_vector(field, n));
            axpy(entry, &field.one(), &v);
        }
        table.retain(|_, v| !is_zero_vector(v));
        let mut alg = LieAlgebra {
            field,
            labels,
            table,
            ad: Vec::new(),
        };
        alg.ad = (0..n)
            .map(|i| {
                let cols: Vec<Vector> = (0..n).map(|j| alg.basis_bracket(i, j)).collect();
                Matrix::from_columns(field, n, &cols).expect("ad columns")
            })
            .collect();
        Ok(alg)
    }

    /// The abelian algebra of dimension `n`.
    pub fn abelian(field: FieldSpec, n: usize) -> Self {
        Self::new(field, default_labels(n), []).expect("abelian")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, in `(i, j)` order.
    pub fn table(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.table
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    pub fn span(&self, vectors: Vec<Vector>) -> Result<Subspace> {
        Subspace::span(self.field, self.dim(), vectors)
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_vector(&self.labels, v)
    }

    pub fn format_subspace(&self, s: &Subspace) -> String {
        let parts: Vec<String> = s.basis().iter().map(|v| self.format(v)).collect();
        format!("<{}>", parts.join(", "))
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table.get(&(i, j)).cloned(),
            std::cmp::Ordering::Greater => self
                .table
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect()),
            std::cmp::Ordering::Equal => None,
        }
        .unwrap_or_else(|| self.zero_vector())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero_vector();
        for (&(i, j), v) in &self.table {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            axpy(&mut out, &c, v);
        }
        out
    }

    /// `ad e_i` as a matrix acting on column vectors.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, c) in x.iter().enumerate() {
            m.axpy(c, &self.ad[i]);
        }
        m
    }

    /// Checks the Jacobi identity on all basis triples; the error names the
    /// first failing triple (1-based) and its residual.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.basis_bracket(i, j);
                for k in j + 1..n {
                    // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
                    let mut r = self.bracket(&self.basis_vector(k), &eij);
                    let ejk = self.basis_bracket(j, k);
                    axpy(&mut r, &self.field.one(), &self.bracket(&self.basis_vector(i), &ejk));
                    let eki = self.basis_bracket(k, i);
                    axpy(&mut r, &self.field.one(), &self.bracket(&self.basis_vector(j), &eki));
                    if !is_zero_vector(&r) {
                        return Err(Error::Jacobi {
                            triple: (i + 1, j + 1, k + 1),
                            residual: self.format(&r),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    fn check(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        if s.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), s.field().to_string()));
        }
        Ok(())
    }

    /// `[U, V]`, spanned by brackets of basis vectors.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check(u)?;
        self.check(v)?;
        let mut out = self.zero_space();
        for x in u.basis() {
            let ad = self.ad(x);
            for y in v.basis() {
                out.insert(&ad.mul_vec(y));
                if out.is_full() {
                    return Ok(out);
                }
            }
        }
        Ok(out)
    }

    /// `L² = [L, L]`.
    pub fn derived_algebra(&self) -> Subspace {
        let vs = self.table.values().cloned().collect();
        self.span(vs).expect("table")
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains(&self.product_space(s, s)?))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        self.check(s)?;
        Ok(self
            .ad
            .iter()
            .all(|m| s.basis().iter().all(|v| s.contains_vector(&m.mul_vec(v)).unwrap_or(false))))
    }

    pub fn require_ideal(&self, s: &Subspace) -> Result<()> {
        if self.is_ideal(s)? {
            Ok(())
        } else {
            Err(Error::NotIdeal(self.format_subspace(s)))
        }
    }

    pub fn require_subalgebra(&self, s: &Subspace) -> Result<()> {
        if self.is_subalgebra(s)? {
            Ok(())
        } else {
            Err(Error::NotSubalgebra(self.format_subspace(s)))
        }
    }

    /// `C_L(S) = {x : [x, S] = 0}`.
    pub fn centraliser(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let n = self.dim();
        if s.is_zero() {
            return Ok(self.full());
        }
        // [x, s] = -ad(s) x, so stack the ad(s) for s in the basis.
        let mut rows = Vec::with_capacity(n * s.dim());
        for v in s.basis() {
            rows.extend(self.ad(v).to_rows());
        }
        Ok(Matrix::from_rows(self.field, n, rows)?.kernel())
    }

    pub fn centre(&self) -> Subspace {
        self.centraliser(&self.full()).expect("full")
    }

    /// `{x ∈ L : [x, A] ⊆ B}` for subspaces `B ⊆ A`.
    pub fn relative_centraliser(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check(a)?;
        self.check(b)?;
        let n = self.dim();
        let mut rows = Vec::new();
        // x ↦ reduce_B([x, a]) is linear in x.
        for v in a.basis() {
            let m = self.ad(v);
            let cols: Vec<Vector> = (0..n).map(|j| b.reduce(&m.column(j))).collect();
            rows.extend(Matrix::from_columns(self.field, n, &cols)?.to_rows());
        }
        if rows.is_empty() {
            return Ok(self.full());
        }
        Ok(Matrix::from_rows(self.field, n, rows)?.kernel())
    }

    /// `{x ∈ L : [x, S] ⊆ S}`.
    pub fn normaliser(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let n = self.dim();
        let mut rows = Vec::new();
        for v in s.basis() {
            let m = self.ad(v);
            let cols: Vec<Vector> = (0..n).map(|j| s.reduce(&m.column(j))).collect();
            rows.extend(Matrix::from_columns(self.field, n, &cols)?.to_rows());
        }
        if rows.is_empty() {
            return Ok(self.full());
        }
        Ok(Matrix::from_rows(self.field, n, rows)?.kernel())
    }

    /// Smallest ideal containing the given subspace (spinning under `ad L`).
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let mut out = s.clone();
        let mut frontier: Vec<Vector> = s.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for m in &self.ad {
                let w = m.mul_vec(&v);
                if out.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        Ok(out)
    }

    /// Largest ideal of `L` inside `s`.
    pub fn core(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let mut x = s.clone();
        loop {
            let mut next = x.clone();
            for m in &self.ad {
                next = x.preimage(m).intersect(&next);
            }
            if next == x {
                return Ok(x);
            }
            x = next;
        }
    }

    /// `S¹ = S, S^{k+1} = [S, S^k]` until it stabilises.
    pub fn lower_central_series(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        self.require_subalgebra(s)?;
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.product_space(s, last)?;
            if &next == last {
                return Ok(series);
            }
            series.push(next);
        }
    }

    /// `S⁽⁰⁾ = S, S⁽ᵏ⁺¹⁾ = [S⁽ᵏ⁾, S⁽ᵏ⁾]` until it stabilises.
    pub fn derived_series(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        self.require_subalgebra(s)?;
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.product_space(last, last)?;
            if &next == last {
                return Ok(series);
            }
            series.push(next);
        }
    }

    /// Nilpotency class of the subalgebra `s`: 0 for the zero algebra, `None` if
    /// `s` is not nilpotent.
    pub fn nilpotency_class(&self, s: &Subspace) -> Result<Option<usize>> {
        let series = self.lower_central_series(s)?;
        let last = series.last().expect("nonempty");
        Ok(last.is_zero().then(|| series.len() - 1))
    }

    /// Number of nonzero terms of the derived series, `None` if not solvable.
    pub fn derived_length(&self, s: &Subspace) -> Result<Option<usize>> {
        let series = self.derived_series(s)?;
        let last = series.last().expect("nonempty");
        Ok(last.is_zero().then(|| series.len() - 1))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class(&self.full()).expect("full").is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length(&self.full()).expect("full").is_some()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// Gram matrix of the Killing form `tr(ad x ad y)`.
    pub fn killing_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut k = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in i..n {
                let t = self.ad[i].mul(&self.ad[j]).expect("square").trace();
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut labels = Vec::with_capacity(n);
        let clash = self.labels.iter().any(|l| other.labels.contains(l));
        labels.extend(self.labels.iter().map(|l| if clash { format!("{l}'") } else { l.clone() }));
        labels.extend(other.labels.iter().map(|l| if clash { format!("{l}\"") } else { l.clone() }));
        let pad = |v: &Vector, offset: usize| {
            let mut w = zero_vector(self.field, n);
            for (k, c) in v.iter().enumerate() {
                w[offset + k] = c.clone();
            }
            w
        };
        let mut brackets = Vec::new();
        for (&(i, j), v) in &self.table {
            brackets.push((i, j, pad(v, 0)));
        }
        for (&(i, j), v) in &other.table {
            brackets.push((n1 + i, n1 + j, pad(v, n1)));
        }
        LieAlgebra::new(self.field, labels, brackets)
    }

    /// The same algebra on the basis `f_j = Σ_i P[i][j] e_i` (columns of an
    /// invertible `P`).
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.nrows() != n || p.ncols() != n || p.rank() != n {
            return Err(Error::input("change of basis must be an invertible n x n matrix"));
        }
        let cols: Vec<Vector> = (0..n).map(|j| p.column(j)).collect();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket(&cols[i], &cols[j]);
                let c = p.solve(&b)?.expect("invertible");
                brackets.push((i, j, c));
            }
        }
        LieAlgebra::new(self.field, default_labels(n), brackets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis() -> LieAlgebra {
        let f = FieldSpec::RATIONALS;
        let labels = vec!["x".into(), "y".into(), "z".into()];
        LieAlgebra::new(f, labels, [(0, 1, unit_vector(f, 3, 2))]).unwrap()
    }

    #[test]
    fn invalid_table_reports_first_triple() {
        let f = FieldSpec::RATIONALS;
        let l = LieAlgebra::new(
            f,
            default_labels(3),
            [(0, 1, unit_vector(f, 3, 2)), (0, 2, unit_vector(f, 3, 0))],
        )
        .unwrap();
        match l.validate() {
            Err(Error::Jacobi { triple, residual }) => {
                assert_eq!(triple, (1, 2, 3));
                assert_eq!(residual, "e3");
            }
            other => panic!("expected Jacobi failure, got {other:?}"),
        }
    }

    #[test]
    fn heisenberg_basics() {
        let h = heis();
        h.validate().unwrap();
        let z = Subspace::coordinate(h.field(), 3, [2]);
        assert_eq!(h.derived_algebra(), z);
        assert_eq!(h.product_space(&h.full(), &h.full()).unwrap(), z);
        assert_eq!(h.centre(), z);
        assert_eq!(h.nilpotency_class(&h.full()).unwrap(), Some(2));
        assert_eq!(h.derived_length(&h.full()).unwrap(), Some(2));
    }

    #[test]
    fn abelian_conventions() {
        let a = LieAlgebra::abelian(FieldSpec::gf(3), 2);
        assert_eq!(a.nilpotency_class(&a.full()).unwrap(), Some(1));
        assert_eq!(a.derived_length(&a.full()).unwrap(), Some(1));
        assert_eq!(a.nilpotency_class(&a.zero_space()).unwrap(), Some(0));
        assert!(a.product_space(&a.full(), &a.full()).unwrap().is_zero());
    }

    #[test]
    fn r2_centraliser_and_core() {
        let f = FieldSpec::gf(3);
        let r2 = LieAlgebra::new(f, default_labels(2), [(0, 1, unit_vector(f, 2, 1))]).unwrap();
        let e1 = Subspace::coordinate(f, 2, [0]);
        let e2 = Subspace::coordinate(f, 2, [1]);
        assert_eq!(r2.centraliser(&e2).unwrap(), e2);
        assert!(r2.core(&e1).unwrap().is_zero());
        assert_eq!(r2.core(&e2).unwrap(), e2);
        assert_eq!(r2.ideal_closure(&e1).unwrap(), r2.full());
        assert_eq!(r2.ideal_closure(&e2).unwrap(), e2);
    }

    #[test]
    fn direct_sum_blocks_are_ideals() {
        let h = heis();
        let s = h.direct_sum(&h).unwrap();
        assert_eq!(s.dim(), 6);
        s.validate().unwrap();
        assert!(s.is_ideal(&Subspace::coordinate(s.field(), 6, 0..3)).unwrap());
        assert!(s.is_nilpotent());
    }

    #[test]
    fn format_vector_signs() {
        let f = FieldSpec::RATIONALS;
        let l = default_labels(3);
        let v = vec![f.from_i64(2), f.zero(), f.from_i64(-1)];
        assert_eq!(format_vector(&l, &v), "2e1 - e3");
    }
}
