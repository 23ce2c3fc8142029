//! Subspaces in canonical (reduced row-echelon) form, subquotients and
//! enumeration of subspaces over finite fields.

use std::ops::ControlFlow;

use super::matrix::{axpy, is_zero_vector, rref_rows, zero_vector, Matrix, Vector};
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A subspace of `F^n`. The basis is the unique RREF basis, so structural
/// equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

fn check_vector(field: FieldSpec, n: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    if let Some(x) = v.iter().find(|x| x.field() != field) {
        return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
    }
    Ok(())
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            field,
            ambient: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        let basis = (0..n).map(|i| super::matrix::unit_vector(field, n, i)).collect();
        Subspace {
            field,
            ambient: n,
            basis,
            pivots: (0..n).collect(),
        }
    }

    pub fn span(field: FieldSpec, n: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            check_vector(field, n, v)?;
        }
        let mut rows = vectors;
        let pivots = rref_rows(&mut rows, n, field);
        Ok(Subspace {
            field,
            ambient: n,
            basis: rows,
            pivots,
        })
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: FieldSpec, n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs = indices
            .into_iter()
            .map(|i| super::matrix::unit_vector(field, n, i))
            .collect();
        Self::span(field, n, vs).expect("unit vectors")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                axpy(&mut r, &c, b);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        check_vector(self.field, self.ambient, v)?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    /// Coefficients of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if is_zero_vector(&self.reduce(v)) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        let mut v = zero_vector(self.field, self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.basis.iter().all(|v| is_zero_vector(&self.reduce(v)))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for b in self.basis.iter_mut() {
            if !b[p].is_zero() {
                let c = -&b[p];
                axpy(b, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension");
        let (mut big, small) = if self.dim() >= other.dim() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for v in &small.basis {
            big.insert(v);
        }
        big
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension");
        let n = self.ambient;
        if self.contains(other) {
            return other.clone();
        }
        if other.contains(self) {
            return self.clone();
        }
        let mut rows: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend(v.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(self.field.zero(), n));
            rows.push(r);
        }
        let pivots = rref_rows(&mut rows, 2 * n, self.field);
        let vs = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Subspace::span(self.field, n, vs).expect("intersection rows")
    }

    /// Image under a linear map `F^n -> F^m` given as an `m x n` matrix.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field, m.nrows(), vs).expect("image")
    }

    /// Preimage `{v : m v ∈ self}` of this subspace under an `ambient x k` matrix.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        let cols: Vec<Vector> = (0..m.ncols()).map(|j| self.reduce(&m.column(j))).collect();
        Matrix::from_columns(self.field, self.ambient, &cols)
            .expect("columns")
            .kernel()
    }

    /// Standard basis vectors at the non-pivot columns; together with the basis
    /// they span the ambient space.
    pub fn complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        Subspace::coordinate(self.field, self.ambient, (0..self.ambient).filter(|&i| !is_pivot[i]))
    }

    /// Annihilator `{w : <w, v> = 0 for all v}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        Matrix::from_rows(self.field, self.ambient, self.basis.clone())
            .expect("rows")
            .kernel()
    }

    /// Basis as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone()).expect("rows")
    }
}

/// The quotient `upper / lower` with an explicit basis of coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    upper: Subspace,
    lower: Subspace,
    reps: Vec<Vector>,
    rep_pivots: Vec<usize>,
}

impl Subquotient {
    pub fn new(upper: &Subspace, lower: &Subspace) -> Result<Self> {
        if !upper.contains(lower) {
            return Err(Error::input("lower subspace is not contained in the upper one"));
        }
        let mut reps: Vec<Vector> = upper.basis.iter().map(|v| lower.reduce(v)).collect();
        let rep_pivots = rref_rows(&mut reps, upper.ambient, upper.field);
        Ok(Subquotient {
            upper: upper.clone(),
            lower: lower.clone(),
            reps,
            rep_pivots,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn upper(&self) -> &Subspace {
        &self.upper
    }

    pub fn lower(&self) -> &Subspace {
        &self.lower
    }

    pub fn representatives(&self) -> &[Vector] {
        &self.reps
    }

    /// Coordinates of the coset `v + lower`; `v` must lie in `upper`.
    pub fn coords(&self, v: &[Scalar]) -> Vector {
        let r = self.lower.reduce(v);
        self.rep_pivots.iter().map(|&p| r[p].clone()).collect()
    }

    pub fn lift(&self, c: &[Scalar]) -> Vector {
        let mut v = zero_vector(self.upper.field, self.upper.ambient);
        for (x, r) in c.iter().zip(&self.reps) {
            axpy(&mut v, x, r);
        }
        v
    }

    /// Preimage in the ambient space of a subspace of the quotient.
    pub fn lift_subspace(&self, s: &Subspace) -> Subspace {
        let mut out = self.lower.clone();
        for b in s.basis() {
            out.insert(&self.lift(b));
        }
        out
    }

    /// Image of a subspace of the ambient space (intersected with `upper`
    /// implicitly: callers pass subspaces of `upper`).
    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        let vs = s.basis().iter().map(|v| self.coords(v)).collect();
        Subspace::span(self.upper.field, self.dim(), vs).expect("projection")
    }
}

/// Number of `k`-dimensional subspaces of `GF(q)^n`, saturating.
pub fn gaussian_binomial(q: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = (q as u128).saturating_pow((n - i) as u32).saturating_sub(1);
        let b = (q as u128).saturating_pow((i + 1) as u32).saturating_sub(1);
        num = num.saturating_mul(a);
        den = den.saturating_mul(b);
        if num == u128::MAX {
            return u128::MAX;
        }
    }
    num / den
}

/// Calls `f` on every `k`-dimensional subspace of `GF(q)^n` (as canonical
/// subspaces). Fails with a capacity error when the count exceeds `cap`.
pub fn for_each_subspace<F>(field: FieldSpec, n: usize, k: usize, cap: u64, mut f: F) -> Result<()>
where
    F: FnMut(Subspace) -> ControlFlow<()>,
{
    let elements = field
        .elements()
        .ok_or_else(|| Error::Unsupported("subspace enumeration needs a finite field".into()))?;
    let q = elements.len() as u64;
    let count = gaussian_binomial(q, n, k);
    if count > cap as u128 {
        return Err(Error::Capacity {
            what: format!("{k}-subspaces of {field}^{n}"),
            cap,
        });
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..n {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut rows = vec![zero_vector(field, n); k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = field.one();
            }
            for (&(i, j), &d) in free.iter().zip(&digits) {
                rows[i][j] = elements[d].clone();
            }
            let s = Subspace {
                field,
                ambient: n,
                basis: rows,
                pivots: pivots.clone(),
            };
            if f(s).is_break() {
                return Ok(());
            }
            // odometer
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < elements.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        if !next_combination(&mut pivots, n) {
            return Ok(());
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on one representative of every 1-dimensional subspace of `span`
/// (the representative has leading coefficient 1 in the canonical basis).
pub fn for_each_projective_point<F>(span: &Subspace, cap: u64, mut f: F) -> Result<()>
where
    F: FnMut(Vector) -> ControlFlow<()>,
{
    let d = span.dim();
    if d <= 1 {
        // works over any field
        if let Some(b) = span.basis().first() {
            let _ = f(b.clone());
        }
        return Ok(());
    }
    for_each_subspace(span.field(), d, 1.min(d), cap, |line| {
        if line.is_zero() {
            return ControlFlow::Continue(());
        }
        f(span.combine(&line.basis()[0]))
    })
}

/// Subspaces of `v` (of dimension `k`) expressed in ambient coordinates.
pub fn for_each_subspace_of<F>(v: &Subspace, k: usize, cap: u64, mut f: F) -> Result<()>
where
    F: FnMut(Subspace) -> ControlFlow<()>,
{
    let field = v.field();
    let n = v.ambient_dim();
    for_each_subspace(field, v.dim(), k, cap, |s| {
        let vs = s.basis().iter().map(|c| v.combine(c)).collect();
        f(Subspace::span(field, n, vs).expect("combined"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, v: &[i64]) -> Vector {
        let f = FieldSpec::gf(p);
        v.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn span_is_canonical() {
        let f = FieldSpec::gf(3);
        let a = Subspace::span(f, 3, vec![gf(3, &[1, 1, 0]), gf(3, &[0, 1, 1])]).unwrap();
        let b = Subspace::span(f, 3, vec![gf(3, &[1, 2, 1]), gf(3, &[2, 0, 1])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_and_sum() {
        let f = FieldSpec::RATIONALS;
        let a = Subspace::coordinate(f, 3, [0, 1]);
        let b = Subspace::coordinate(f, 3, [1, 2]);
        assert_eq!(a.intersect(&b), Subspace::coordinate(f, 3, [1]));
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn subquotient_roundtrip() {
        let f = FieldSpec::gf(5);
        let upper = Subspace::full(f, 3);
        let lower = Subspace::span(f, 3, vec![gf(5, &[1, 2, 3])]).unwrap();
        let sq = Subquotient::new(&upper, &lower).unwrap();
        assert_eq!(sq.dim(), 2);
        let v = gf(5, &[4, 0, 1]);
        let back = sq.lift(&sq.coords(&v));
        assert!(lower.contains_vector(&super::super::matrix::sub_vectors(&v, &back)).unwrap());
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomial() {
        for (p, n, k) in [(2, 4, 2), (3, 3, 1), (2, 3, 0), (2, 3, 3)] {
            let mut count = 0u128;
            let mut seen = std::collections::HashSet::new();
            for_each_subspace(FieldSpec::gf(p), n, k, 1 << 20, |s| {
                count += 1;
                seen.insert(s);
                ControlFlow::Continue(())
            })
            .unwrap();
            assert_eq!(count, gaussian_binomial(p as u64, n, k));
            assert_eq!(seen.len() as u128, count);
        }
    }

    #[test]
    fn enumeration_respects_cap() {
        let r = for_each_subspace(FieldSpec::gf(2), 6, 3, 10, |_| ControlFlow::Continue(()));
        assert!(matches!(r, Err(Error::Capacity { .. })));
    }

    #[test]
    fn preimage_and_annihilator() {
        let f = FieldSpec::RATIONALS;
        let m = Matrix::identity(f, 3);
        let w = Subspace::coordinate(f, 3, [2]);
        assert_eq!(w.preimage(&m), w);
        assert_eq!(w.annihilator(), Subspace::coordinate(f, 3, [0, 1]));
    }
}
