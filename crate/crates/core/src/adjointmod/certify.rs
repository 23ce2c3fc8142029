//! Irreducibility certificates for modules.
//!
//! Over finite fields the test is exact: quick spinning checks, then Norton's
//! criterion on a singular element `θ = X - c` of the enveloping algebra
//! (every vector of `ker θ` and of `ker θᵀ` must spin to the whole space),
//! with exhaustive spinning as a fallback. In characteristic 0 Norton is used
//! with nullity one, then the trace-form radical and the commutant.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::module::Module;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::matrix::unit_vector;
use crate::exactla::subspace::for_each_projective_point;
use crate::exactla::{FieldSpec, Matrix, Scalar, Subspace, Vector};

/// How irreducibility was established.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Certificate {
    /// One-dimensional modules are irreducible.
    Dimension,
    /// Every nonzero vector (up to scalars) spins to the whole module.
    Enumeration { points: u64 },
    /// Norton's criterion with a singular element of the given nullity.
    Norton { nullity: usize },
    /// Semisimple enveloping algebra whose commutant is a division algebra.
    Commutant { dim: usize },
    /// Supplied as a hint and verified by one of the above.
    Hint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(Certificate),
    /// A proper nonzero submodule.
    Reducible(Subspace),
    Undetermined(String),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

/// Nullities up to this many projective points are enumerated in Norton's test.
const NORTON_POINTS: u64 = 4096;

pub(crate) fn irreducibility(m: &Module, caps: &Caps, salt: u64) -> Result<Irreducibility> {
    let d = m.dim();
    let field = m.field();
    if d == 0 {
        return Err(Error::input("the zero module has no irreducibility verdict"));
    }
    if d == 1 {
        return Ok(Irreducibility::Irreducible(Certificate::Dimension));
    }
    if m.generators().is_empty() {
        return Ok(Irreducibility::Reducible(Subspace::coordinate(field, d, [0])));
    }
    // Common fixed points and the augmentation image are submodules.
    let mut rows = Vec::new();
    for g in m.generators() {
        rows.extend(g.to_rows());
    }
    let fixed = Matrix::from_rows(field, d, rows)?.kernel();
    if !fixed.is_zero() {
        return Ok(Irreducibility::Reducible(fixed));
    }
    let mut image = Subspace::zero(field, d);
    for g in m.generators() {
        image = image.sum(&Subspace::span(field, d, g.transpose().to_rows())?);
    }
    if !image.is_full() {
        return Ok(Irreducibility::Reducible(image));
    }
    for i in 0..d {
        let s = m.spin(&[unit_vector(field, d, i)]);
        if !s.is_full() {
            return Ok(Irreducibility::Reducible(s));
        }
    }
    if let Some(r) = norton(m, caps, salt)? {
        return Ok(r);
    }
    if let Some(q) = field.order() {
        let points = (q as f64).powi(d as i32);
        if points <= caps.enum_cap as f64 {
            return exhaustive(m, caps);
        }
        return Ok(Irreducibility::Undetermined(format!(
            "no singular element of small nullity among {} random elements",
            caps.spin_seeds
        )));
    }
    char0(m)
}

fn exhaustive(m: &Module, caps: &Caps) -> Result<Irreducibility> {
    let mut found = None;
    let mut points = 0u64;
    for_each_projective_point(&m.full(), caps.enum_cap, |v| {
        points += 1;
        let s = m.spin(&[v]);
        if s.is_full() {
            ControlFlow::Continue(())
        } else {
            found = Some(s);
            ControlFlow::Break(())
        }
    })?;
    Ok(match found {
        Some(s) => Irreducibility::Reducible(s),
        None => Irreducibility::Irreducible(Certificate::Enumeration { points }),
    })
}

fn candidate_shifts(field: FieldSpec, rng: &mut impl Rng) -> Vec<Scalar> {
    match field.elements() {
        Some(all) if all.len() <= 64 => all,
        Some(_) => (0..32).map(|_| field.random(rng)).collect(),
        None => (-3..=3).map(|i| field.from_i64(i)).collect(),
    }
}

fn projective_count(field: FieldSpec, k: usize) -> u64 {
    match field.order() {
        Some(q) => {
            let total = (q as f64).powi(k as i32);
            if total > 1e18 {
                u64::MAX
            } else {
                ((q.pow(k as u32) - 1) / (q - 1)).max(1)
            }
        }
        None if k == 1 => 1,
        None => u64::MAX,
    }
}

fn norton(m: &Module, caps: &Caps, salt: u64) -> Result<Option<Irreducibility>> {
    let field = m.field();
    let d = m.dim();
    let gens = m.generators();
    let mut rng = caps.rng(salt ^ 0x4e4f_5254);
    let shifts = candidate_shifts(field, &mut rng);
    let mut pool: Vec<Matrix> = gens.to_vec();
    let identity = Matrix::identity(field, d);
    for attempt in 0..caps.spin_seeds.max(1) {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let prod = a.mul(b)?;
        let mut x = if attempt == 0 {
            gens[0].clone()
        } else {
            prod.clone()
        };
        for g in gens {
            x.axpy(&field.random(&mut rng), g);
        }
        if pool.len() < 32 {
            pool.push(prod);
        }
        for c in &shifts {
            let theta = x.sub(&identity.scale(c));
            let kernel = theta.kernel();
            let k = kernel.dim();
            if k == 0 || projective_count(field, k) > NORTON_POINTS.min(caps.enum_cap) {
                continue;
            }
            return norton_test(m, &theta, &kernel, caps).map(Some);
        }
    }
    Ok(None)
}

fn norton_test(m: &Module, theta: &Matrix, kernel: &Subspace, caps: &Caps) -> Result<Irreducibility> {
    let mut proper = None;
    for_each_projective_point(kernel, caps.enum_cap, |v| {
        let s = m.spin(&[v]);
        if s.is_full() {
            ControlFlow::Continue(())
        } else {
            proper = Some(s);
            ControlFlow::Break(())
        }
    })?;
    if let Some(s) = proper {
        return Ok(Irreducibility::Reducible(s));
    }
    let dual = m.dual();
    let cokernel = theta.transpose().kernel();
    for_each_projective_point(&cokernel, caps.enum_cap, |w| {
        let s = dual.spin(&[w]);
        if s.is_full() {
            ControlFlow::Continue(())
        } else {
            proper = Some(s.annihilator());
            ControlFlow::Break(())
        }
    })?;
    Ok(match proper {
        Some(s) => Irreducibility::Reducible(s),
        None => Irreducibility::Irreducible(Certificate::Norton {
            nullity: kernel.dim(),
        }),
    })
}

fn flatten(a: &Matrix) -> Vector {
    a.entries().to_vec()
}

fn unflatten(field: FieldSpec, d: usize, v: &[Scalar]) -> Matrix {
    let rows = v.chunks(d).map(|r| r.to_vec()).collect();
    Matrix::from_rows(field, d, rows).expect("square")
}

/// Largest module dimension handled by the characteristic-0 fallback.
const CHAR0_MAX_DIM: usize = 16;

fn char0(m: &Module) -> Result<Irreducibility> {
    let field = m.field();
    let d = m.dim();
    if d > CHAR0_MAX_DIM {
        return Ok(Irreducibility::Undetermined(format!(
            "characteristic-0 fallback limited to dimension {CHAR0_MAX_DIM}"
        )));
    }
    // Enveloping associative algebra A, spanned by words in the generators.
    let mut span = Subspace::zero(field, d * d);
    let mut basis: Vec<Matrix> = Vec::new();
    let id = Matrix::identity(field, d);
    span.insert(&flatten(&id));
    basis.push(id);
    let mut i = 0;
    while i < basis.len() {
        for g in m.generators() {
            let w = g.mul(&basis[i])?;
            if span.insert(&flatten(&w)) {
                basis.push(w);
            }
        }
        i += 1;
    }
    // In characteristic 0 the radical of the trace form of A is its Jacobson radical.
    let n = basis.len();
    let mut gram = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in a..n {
            let t = basis[a].mul(&basis[b])?.trace();
            gram.set(a, b, t.clone());
            gram.set(b, a, t);
        }
    }
    let radical = gram.kernel();
    if !radical.is_zero() {
        let mut jv = Subspace::zero(field, d);
        for c in radical.basis() {
            let mut j = Matrix::zeros(field, d, d);
            for (coef, a) in c.iter().zip(&basis) {
                j.axpy(coef, a);
            }
            jv = jv.sum(&Subspace::span(field, d, j.transpose().to_rows())?);
        }
        return Ok(Irreducibility::Reducible(jv));
    }
    // A is semisimple: V is irreducible iff its commutant is a division algebra.
    let mut eqs = Vec::new();
    for g in m.generators() {
        for r in 0..d {
            for c in 0..d {
                // (g X - X g)[r][c] as a linear form in the entries of X.
                let mut row = vec![field.zero(); d * d];
                for k in 0..d {
                    row[k * d + c] = &row[k * d + c] + g.get(r, k);
                    row[r * d + k] = &row[r * d + k] - g.get(k, c);
                }
                eqs.push(row);
            }
        }
    }
    let commutant = Matrix::from_rows(field, d * d, eqs)?.kernel();
    let cdim = commutant.dim();
    if cdim == 1 {
        return Ok(Irreducibility::Irreducible(Certificate::Commutant { dim: 1 }));
    }
    let elements: Vec<Matrix> = commutant
        .basis()
        .iter()
        .map(|v| unflatten(field, d, v))
        .collect();
    for c in &elements {
        let poly = minimal_polynomial(c)?;
        if let Some(root) = rational_root(&poly) {
            let shifted = c.sub(&Matrix::identity(field, d).scale(&Scalar::Rational(root)));
            let k = shifted.kernel();
            if !k.is_zero() && !k.is_full() {
                return Ok(Irreducibility::Reducible(k));
            }
        }
    }
    let commutative = elements.iter().all(|a| {
        elements
            .iter()
            .all(|b| a.mul(b).ok() == b.mul(a).ok())
    });
    if commutative {
        for c in &elements {
            let poly = minimal_polynomial(c)?;
            let deg = poly.len() - 1;
            if deg == cdim && deg <= 3 && rational_root(&poly).is_none() {
                return Ok(Irreducibility::Irreducible(Certificate::Commutant { dim: cdim }));
            }
        }
    }
    Ok(Irreducibility::Undetermined(format!(
        "commutant of dimension {cdim} not resolved"
    )))
}

/// Monic minimal polynomial, coefficients from the constant term up.
pub(crate) fn minimal_polynomial(a: &Matrix) -> Result<Vec<BigRational>> {
    let field = a.field();
    let d = a.nrows();
    let mut powers: Vec<Vector> = vec![flatten(&Matrix::identity(field, d))];
    let mut span = Subspace::span(field, d * d, powers.clone())?;
    let mut current = Matrix::identity(field, d);
    loop {
        current = current.mul(a)?;
        let v = flatten(&current);
        if !span.insert(&v) {
            let cols = Matrix::from_columns(field, d * d, &powers)?;
            let c = cols.solve(&v)?.expect("dependent power");
            let mut poly: Vec<BigRational> = c
                .iter()
                .map(|x| -x.as_rational().cloned().unwrap_or_else(BigRational::zero))
                .collect();
            poly.push(BigRational::one());
            return Ok(poly);
        }
        powers.push(v);
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Some(out)
}

/// Some rational root of the polynomial, by the rational root test.
pub(crate) fn rational_root(poly: &[BigRational]) -> Option<BigRational> {
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let low = ints.iter().position(|c| !c.is_zero())?;
    if low > 0 {
        return Some(BigRational::zero());
    }
    let lead = ints.last()?;
    let ps = divisors(&ints[0])?;
    let qs = divisors(lead)?;
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let x = BigRational::new(p * sign, q.clone());
                if eval(&x).is_zero() {
                    return Some(x);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn rotation() -> Module {
        let f = q();
        let mut g = Matrix::zeros(f, 2, 2);
        g.set(0, 1, f.from_i64(-1));
        g.set(1, 0, f.one());
        Module::new(f, 2, vec![g]).unwrap()
    }

    #[test]
    fn rotation_is_irreducible_over_q() {
        let r = rotation().irreducibility(&Caps::default(), 0).unwrap();
        assert!(r.is_irreducible(), "{r:?}");
    }

    #[test]
    fn rotation_splits_over_gf5() {
        // x² + 1 has roots ±2 mod 5.
        let f = FieldSpec::gf(5);
        let mut g = Matrix::zeros(f, 2, 2);
        g.set(0, 1, f.from_i64(-1));
        g.set(1, 0, f.one());
        let m = Module::new(f, 2, vec![g]).unwrap();
        assert!(matches!(
            m.irreducibility(&Caps::default(), 0).unwrap(),
            Irreducibility::Reducible(_)
        ));
    }

    #[test]
    fn diagonal_module_over_q_is_reducible() {
        let f = q();
        let mut g = Matrix::zeros(f, 2, 2);
        g.set(0, 0, f.one());
        g.set(1, 1, f.from_i64(2));
        let m = Module::new(f, 2, vec![g]).unwrap();
        assert!(matches!(
            m.irreducibility(&Caps::default(), 0).unwrap(),
            Irreducibility::Reducible(_)
        ));
    }

    #[test]
    fn rational_roots() {
        let r = |v: &[i64]| -> Vec<BigRational> {
            v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
        };
        // 2x² - 3x + 1 = (2x - 1)(x - 1)
        assert!(rational_root(&r(&[1, -3, 2])).is_some());
        assert!(rational_root(&r(&[1, 0, 1])).is_none());
        assert_eq!(rational_root(&r(&[0, 1])), Some(BigRational::zero()));
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let f = q();
        let mut p = Matrix::zeros(f, 2, 2);
        p.set(0, 0, f.one());
        let poly = minimal_polynomial(&p).unwrap();
        assert_eq!(poly.len(), 3);
    }
}
