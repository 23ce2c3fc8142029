//! The shipped corpus. Expectations here are derived by hand from the
//! constructions and frozen; nothing in this file is computed by the library.

use std::path::Path;

use super::builders::*;
use super::doc::{AlgebraDoc, Fixture, Hints};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Subspace};
use crate::liecore::{LieAlgebra, Quotient};

fn coords(l: &LieAlgebra, idx: impl IntoIterator<Item = usize>) -> Subspace {
    Subspace::coordinate(l.field(), l.dim(), idx)
}

fn abelian_fixture(name: &str, f: FieldSpec, n: usize) -> Fixture {
    let l = abelian(f, n);
    let all = l.full();
    let zero = l.zero_space();
    Fixture::new(name, l)
        .expect_subspace("centre", &all)
        .expect_subspace("nilradical", &all)
        .expect_subspace("solvable_radical", &all)
        .expect_subspace("frattini", &zero)
        .expect_subspace("n_star", &all)
        .expect_subspace("n_tilde", &all)
        .expect_subspace("socle", &all)
        .expect_int("nilpotency_class", 1)
        .expect_int("derived_length", 1)
}

fn r2_fixture(name: &str, f: FieldSpec) -> Fixture {
    let l = r2(f);
    let e2 = coords(&l, [1]);
    let mut fx = Fixture::new(name, l.clone())
        .expect_subspace("centre", &l.zero_space())
        .expect_subspace("nilradical", &e2)
        .expect_subspace("solvable_radical", &l.full())
        .expect_subspace("frattini", &l.zero_space())
        .expect_subspace("n_star", &e2)
        .expect_subspace("n_dagger", &e2)
        .expect_subspace("n_hat", &e2)
        .expect_subspace("n_tilde", &e2)
        .expect_subspace("socle", &e2)
        .expect_int("nilradical_class", 1)
        .expect_int("derived_length", 2);
    if f.characteristic() == 0 {
        // maximal subalgebras ⟨e2⟩ and ⟨e1 + c e2⟩ meet in 0
        fx.hints.frattini = Some(l.zero_space());
    } else {
        let p = f.characteristic();
        fx = fx
            .expect_bool("nilregular", 1 + 1 < p)
            .expect_bool("solregular", 4 < p);
    }
    fx
}

fn heisenberg_fixture(name: &str, f: FieldSpec) -> Fixture {
    let l = heisenberg(f);
    let z = coords(&l, [2]);
    Fixture::new(name, l.clone())
        .expect_subspace("centre", &z)
        .expect_subspace("nilradical", &l.full())
        .expect_subspace("solvable_radical", &l.full())
        .expect_subspace("frattini", &z)
        .expect_subspace("n_star", &l.full())
        .expect_subspace("n_tilde", &l.full())
        .expect_subspace("socle", &z)
        .expect_int("nilpotency_class", 2)
        .expect_int("derived_length", 2)
}

fn sl2_fixture(name: &str, f: FieldSpec) -> Fixture {
    let l = sl2(f);
    let all = l.full();
    let zero = l.zero_space();
    Fixture::new(name, l)
        .expect_subspace("centre", &zero)
        .expect_subspace("nilradical", &zero)
        .expect_subspace("solvable_radical", &zero)
        .expect_subspace("frattini", &zero)
        .expect_subspace("n_star", &all)
        .expect_subspace("n_dagger", &all)
        .expect_subspace("n_hat", &all)
        .expect_subspace("n_tilde", &all)
        .expect_subspace("socle", &all)
}

fn gl2_fixture(name: &str, f: FieldSpec) -> Fixture {
    let l = gl2(f);
    let one = f.one();
    let zero = f.zero();
    let scalars = l
        .span(vec![vec![one.clone(), zero.clone(), zero.clone(), one]])
        .expect("identity");
    let all = l.full();
    let mut fx = Fixture::new(name, l)
        .expect_subspace("centre", &scalars)
        .expect_subspace("nilradical", &scalars)
        .expect_subspace("solvable_radical", &scalars)
        .expect_subspace("frattini", &Subspace::zero(f, 4))
        .expect_subspace("n_star", &all)
        .expect_subspace("n_dagger", &all)
        .expect_subspace("n_hat", &all)
        .expect_subspace("n_tilde", &all)
        .expect_subspace("socle", &all);
    if f.characteristic() == 0 {
        // gl2 = F·I ⊕ sl2 and both summands are φ-free
        fx.hints.frattini = Some(Subspace::zero(f, 4));
    }
    fx
}

fn filiform_fixture(n: usize) -> Fixture {
    let f = FieldSpec::gf(5);
    let l = filiform(f, n).expect("n ≥ 3");
    let all = l.full();
    Fixture::new(&format!("filiform{n}-gf5"), l.clone())
        .expect_subspace("centre", &coords(&l, [n - 1]))
        .expect_subspace("nilradical", &all)
        .expect_subspace("solvable_radical", &all)
        .expect_subspace("frattini", &coords(&l, 2..n))
        .expect_subspace("n_star", &all)
        .expect_subspace("n_tilde", &all)
        .expect_int("nilpotency_class", n as u64 - 1)
        .expect_int("derived_length", 2)
        .expect_bool("nilregular", n - 1 < 4)
        .expect_bool("solregular", true)
}

fn trunc_fixture(p: u32) -> Fixture {
    let f = FieldSpec::gf(p);
    let l = trunc_tensor(&sl2(f), 1, p).expect("small");
    let plus = coords(&l, 3..l.dim());
    // N = sl2 ⊗ O⁺. N/φ is abelian, so N² = sl2 ⊗ (x²) ⊆ φ; conversely the
    // maximal subalgebras sl2 ⊗ 1 + N² and b ⊗ 1 + N (b a Borel) meet in N².
    let n2 = coords(&l, 6..l.dim());
    let mut fx = Fixture::new(&format!("trunc-sl2-o1-gf{p}"), l.clone())
        .expect_subspace("centre", &l.zero_space())
        .expect_subspace("nilradical", &plus)
        .expect_subspace("solvable_radical", &plus)
        .expect_subspace("frattini", &n2)
        .expect_subspace("n_star", &plus)
        .expect_subspace("n_tilde", &plus)
        .expect_int("dim", 3 * p as u64)
        .expect_int("nilradical_class", p as u64 - 1)
        .expect_int("radical_derived_length", 3)
        .expect_bool("nilregular", false)
        .expect_bool("solregular", false);
    fx.hints.frattini = Some(n2);
    fx
}

fn nil7_fixture() -> Fixture {
    let l = nil7();
    let all = l.full();
    Fixture::new("nil7-gf7", l)
        .expect_subspace("nilradical", &all)
        .expect_subspace("solvable_radical", &all)
        .expect_subspace("n_star", &all)
        .expect_int("nilpotency_class", 5)
        .expect_int("derived_length", 3)
        .expect_bool("nilregular", true)
        .expect_bool("solregular", false)
}

/// The ideal `A = sl2 ⊗ O_1` and its augmentation part `A⁺` inside `pasha(p, 1)`.
pub fn pasha_ideals(l: &LieAlgebra) -> (Subspace, Subspace) {
    let n = l.dim();
    (coords(l, 0..n - 1), coords(l, 3..n - 1))
}

fn pasha_fixture() -> Fixture {
    let l = pasha(7, 1).expect("pasha");
    let (a, a_plus) = pasha_ideals(&l);
    let zero = l.zero_space();
    let mut fx = Fixture::new("pasha-7-1", l.clone())
        .expect_int("dim", 22)
        .expect_subspace("centre", &zero)
        .expect_subspace("nilradical", &zero)
        .expect_subspace("n_star", &a)
        .expect_subspace("n_dagger", &a)
        .expect_subspace("e_hat", &zero)
        .expect_subspace("n_hat", &zero)
        .expect_subspace("star_infty", &a_plus);
    fx.hints = Hints {
        minimal_ideals: Some(vec![a]),
        ..Hints::default()
    };
    fx
}

fn sum_fixture(name: &str, a: &LieAlgebra, b: &LieAlgebra) -> Fixture {
    Fixture::new(name, a.direct_sum(b).expect("same field"))
}

/// The shipped fixtures, in a fixed order.
pub fn standard() -> Vec<Fixture> {
    let q = FieldSpec::RATIONALS;
    let (f2, f3) = (FieldSpec::gf(2), FieldSpec::gf(3));
    let mut out = vec![
        abelian_fixture("abelian3-q", q, 3),
        r2_fixture("r2-q", q),
        heisenberg_fixture("heis-q", q),
        sl2_fixture("sl2-q", q),
        gl2_fixture("gl2-q", q),
        sum_fixture("sl2+r2-q", &sl2(q), &r2(q)),
        sum_fixture("heis+sl2-q", &heisenberg(q), &sl2(q)),
        sum_fixture("heis+heis-q", &heisenberg(q), &heisenberg(q)),
        abelian_fixture("abelian2-gf2", f2, 2),
        r2_fixture("r2-gf2", f2),
        heisenberg_fixture("heis-gf2", f2),
        sum_fixture("r2+heis-gf2", &r2(f2), &heisenberg(f2)),
        r2_fixture("r2-gf3", f3),
        heisenberg_fixture("heis-gf3", f3),
        sl2_fixture("sl2-gf3", f3),
        gl2_fixture("gl2-gf3", f3),
        sum_fixture("r2+abelian1-gf3", &r2(f3), &abelian(f3, 1)),
    ];
    out.extend((5..=8).map(filiform_fixture));
    out.push(trunc_fixture(5));
    out.push(nil7_fixture());
    out.push(trunc_fixture(7));
    out.push(pasha_fixture());
    // φ of a direct sum is the sum of the φ of the summands
    for fx in &mut out {
        match fx.name.as_str() {
            "sl2+r2-q" => fx.hints.frattini = Some(fx.algebra.zero_space()),
            "heis+sl2-q" => fx.hints.frattini = Some(coords(&fx.algebra, [2])),
            _ => {}
        }
    }
    out
}

/// Quotients of the small fixtures by their centre and derived algebra,
/// when these are proper and nonzero.
pub fn quotients(base: &[Fixture]) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for fx in base.iter().filter(|f| f.algebra.dim() <= 8) {
        let l = &fx.algebra;
        for (tag, ideal) in [("z", l.centre()), ("d", l.derived_algebra())] {
            if ideal.is_zero() || ideal.is_full() {
                continue;
            }
            let q = Quotient::new(l, &ideal)?;
            out.push(Fixture::new(&format!("{}/{tag}", fx.name), q.algebra));
        }
    }
    Ok(out)
}

/// The suite corpus: shipped fixtures followed by their generated quotients.
pub fn suite() -> Result<Vec<Fixture>> {
    let base = standard();
    let q = quotients(&base)?;
    Ok(base.into_iter().chain(q).collect())
}

/// Writes every shipped fixture as `<name>.json` into `dir`, plus the literal
/// seven-dimensional table (which fails validation) under `rejected/`.
pub fn emit(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir.join("rejected"))?;
    let mut written = Vec::new();
    for fx in standard() {
        let path = dir.join(format!("{}.json", file_stem(&fx.name)));
        std::fs::write(&path, fx.to_json())?;
        written.push(path);
    }
    let path = dir.join("rejected").join("bokut7-gf7.json");
    std::fs::write(&path, AlgebraDoc::from_algebra("bokut7-gf7", &bokut7_table()).to_json())?;
    written.push(path);
    Ok(written)
}

pub fn file_stem(name: &str) -> String {
    name.replace(['/', '+'], "_")
}

pub fn by_name(name: &str) -> Result<Fixture> {
    standard()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::input(format!("no fixture named `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid_and_named_uniquely() {
        let all = standard();
        assert!(all.len() >= 15);
        let mut names: Vec<_> = all.iter().map(|f| f.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
        for fx in &all {
            fx.algebra.validate().unwrap();
        }
    }

    #[test]
    fn quotients_are_generated() {
        let q = quotients(&standard()).unwrap();
        assert!(q.iter().any(|f| f.name == "heis-gf2/z"));
        assert!(q.iter().all(|f| f.algebra.validate().is_ok()));
    }
}
