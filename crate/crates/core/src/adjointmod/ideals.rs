//! Ideals of a Lie algebra through its adjoint action: minimal ideals, socles,
//! chief series and chief-factor centralisers.

use serde::{Deserialize, Serialize};

use super::certify::{Certificate, Irreducibility};
use super::module::Module;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subquotient, Subspace, Vector};
use crate::liecore::LieAlgebra;

/// The action of the subalgebra `acting` on `upper / lower` by brackets.
/// Both spaces must be invariant under `ad acting`. Generators follow the
/// basis of `acting` (zero and repeated ones dropped).
pub fn action_module(
    l: &LieAlgebra,
    acting: &Subspace,
    upper: &Subspace,
    lower: &Subspace,
) -> Result<(Module, Subquotient)> {
    let sq = Subquotient::new(upper, lower)?;
    let d = sq.dim();
    let mut gens = Vec::with_capacity(acting.dim());
    for x in acting.basis() {
        let ad = l.ad(x);
        for (space, what) in [(upper, "upper"), (lower, "lower")] {
            for v in space.basis() {
                if !space.contains_vector(&ad.mul_vec(v))? {
                    return Err(Error::NotIdeal(format!(
                        "{what} space {} is not invariant",
                        l.format_subspace(space)
                    )));
                }
            }
        }
        let cols: Vec<Vector> = sq
            .representatives()
            .iter()
            .map(|r| sq.coords(&ad.mul_vec(r)))
            .collect();
        gens.push(Matrix::from_columns(l.field(), d, &cols)?);
    }
    Ok((Module::new(l.field(), d, gens)?, sq))
}

/// Smallest ideal containing the vectors.
pub fn spin(l: &LieAlgebra, vectors: Vec<Vector>) -> Result<Subspace> {
    l.ideal_closure(&l.span(vectors)?)
}

/// How a list of minimal ideals was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Spin every nonzero vector (finite fields within the cap).
    Exhaustive,
    /// Composition factors and homomorphism images (any field).
    Structured,
    /// Verify the given candidates; fall back on the structured result when available.
    Hinted(Vec<Subspace>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegimeTag {
    Exhaustive,
    Structured,
    Hinted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    /// Minimal ideals of `L / lower` inside `upper / lower`, as preimages in `L`.
    pub minimal_ideals: Vec<Subspace>,
    pub socle: Subspace,
    pub abelian_socle: Subspace,
    /// Whether `minimal_ideals` is the full list.
    pub complete: bool,
    pub regime: RegimeTag,
}

/// Minimal ideals of `L / lower` contained in `upper / lower`, pulled back to `L`.
/// With `lower = 0` and `upper = s` this is the `L`-socle of `s`.
pub fn socle_between(
    l: &LieAlgebra,
    upper: &Subspace,
    lower: &Subspace,
    regime: &Regime,
    caps: &Caps,
) -> Result<SocleReport> {
    l.require_ideal(upper)?;
    l.require_ideal(lower)?;
    let (module, sq) = action_module(l, &l.full(), upper, lower)?;
    let pull = |s: &Subspace| sq.lift_subspace(s);
    let (minimal, socle, complete, tag) = match regime {
        Regime::Exhaustive => {
            let found = module
                .enumerate_minimal(&module.full(), caps)?
                .ok_or_else(|| Error::Capacity {
                    what: format!(
                        "exhaustive minimal-ideal search over {} vectors of dimension {}",
                        l.field(),
                        module.dim()
                    ),
                    cap: caps.enum_cap,
                })?;
            let socle = found
                .iter()
                .fold(Subspace::zero(l.field(), module.dim()), |a, m| a.sum(m));
            (found, socle, true, RegimeTag::Exhaustive)
        }
        Regime::Structured => {
            let s = module.socle(caps, 0x50c1e)?;
            (s.minimal, s.socle, s.complete, RegimeTag::Structured)
        }
        Regime::Hinted(hints) => {
            let mut verified = Vec::new();
            let mut hint_only = false;
            for h in hints {
                if !upper.contains(h) || !h.contains(lower) || h == lower {
                    return Err(Error::Certificate(format!(
                        "hint {} does not lie strictly between the given ideals",
                        l.format_subspace(h)
                    )));
                }
                l.require_ideal(h)?;
                let local = sq.project_subspace(h);
                let (sub, _) = module.subquotient(&local, &Subspace::zero(l.field(), module.dim()))?;
                match sub.irreducibility(caps, 0x4817)? {
                    Irreducibility::Irreducible(_) => verified.push(local),
                    // not refuted: accepted on the strength of the hint
                    Irreducibility::Undetermined(_) => {
                        verified.push(local);
                        hint_only = true;
                    }
                    Irreducibility::Reducible(u) => {
                        return Err(Error::Certificate(format!(
                            "hinted minimal ideal {} has the proper submodule {}",
                            l.format_subspace(h),
                            l.format_subspace(&sq.lift_subspace(&u))
                        )))
                    }
                }
            }
            match module.socle(caps, 0x50c1e) {
                Ok(s) if !hint_only => {
                    if let Some(h) = verified.iter().find(|h| !s.minimal.contains(h) && s.complete) {
                        return Err(Error::Certificate(format!(
                            "hinted ideal {} is not among the computed minimal ideals",
                            l.format_subspace(&pull(h))
                        )));
                    }
                    (s.minimal, s.socle, s.complete, RegimeTag::Hinted)
                }
                Ok(_) => {
                    let socle = verified
                        .iter()
                        .fold(Subspace::zero(l.field(), module.dim()), |a, m| a.sum(m));
                    (verified, socle, false, RegimeTag::Hinted)
                }
                Err(e) if e.is_capacity() => {
                    let socle = verified
                        .iter()
                        .fold(Subspace::zero(l.field(), module.dim()), |a, m| a.sum(m));
                    (verified, socle, false, RegimeTag::Hinted)
                }
                Err(e) => return Err(e),
            }
        }
    };
    let minimal_ideals: Vec<Subspace> = minimal.iter().map(pull).collect();
    let mut abelian_socle = lower.clone();
    for m in &minimal_ideals {
        if lower.contains(&l.product_space(m, m)?) {
            abelian_socle = abelian_socle.sum(m);
        }
    }
    Ok(SocleReport {
        minimal_ideals,
        socle: pull(&socle),
        abelian_socle,
        complete,
        regime: tag,
    })
}

/// All minimal ideals of `L`.
pub fn minimal_ideals(l: &LieAlgebra, regime: &Regime, caps: &Caps) -> Result<SocleReport> {
    socle_between(l, &l.full(), &l.zero_space(), regime, caps)
}

/// Sum of the minimal ideals of `L` inside the ideal `s`.
pub fn l_socle(l: &LieAlgebra, s: &Subspace, caps: &Caps) -> Result<Subspace> {
    Ok(socle_between(l, s, &l.zero_space(), &Regime::Structured, caps)?.socle)
}

/// Whether the nonzero ideal `i` is a minimal ideal of `L`.
pub fn is_irreducible_adjoint(l: &LieAlgebra, i: &Subspace, caps: &Caps) -> Result<Irreducibility> {
    if i.is_zero() {
        return Err(Error::input("the zero ideal is not minimal"));
    }
    l.require_ideal(i)?;
    let (m, sq) = action_module(l, &l.full(), i, &l.zero_space())?;
    Ok(match m.irreducibility(caps, 0x1dea1)? {
        Irreducibility::Reducible(u) => Irreducibility::Reducible(sq.lift_subspace(&u)),
        other => other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Abelian,
    Simple,
    Irregular,
}

/// `B ⊂ A` ideals of `L` with `A / B` minimal in `L / B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefFactor {
    pub lower: Subspace,
    pub upper: Subspace,
    pub kind: FactorKind,
    pub certificate: Certificate,
}

/// Abelian when `A² ⊆ B`, simple when `A / B` has no proper ideal of its own,
/// irregular otherwise.
pub fn factor_kind(l: &LieAlgebra, upper: &Subspace, lower: &Subspace, caps: &Caps) -> Result<FactorKind> {
    if lower.contains(&l.product_space(upper, upper)?) {
        return Ok(FactorKind::Abelian);
    }
    let (m, _) = action_module(l, upper, upper, lower)?;
    match m.irreducibility(caps, 0xfac7)? {
        Irreducibility::Irreducible(_) => Ok(FactorKind::Simple),
        Irreducibility::Reducible(_) => Ok(FactorKind::Irregular),
        Irreducibility::Undetermined(why) => Err(Error::Capacity {
            what: format!("simplicity of a {}-dimensional factor ({why})", m.dim()),
            cap: caps.spin_seeds as u64,
        }),
    }
}

/// Consecutive pairs `(B, A, certificate)` of a chief series through the given
/// ideals, without classifying the factors. Seeds that are not ideals are
/// rejected; seeds not comparable with the chain built so far are skipped.
pub fn chief_chain(
    l: &LieAlgebra,
    seeds: &[Subspace],
    caps: &Caps,
) -> Result<Vec<(Subspace, Subspace, Certificate)>> {
    let mut chain = vec![l.zero_space()];
    let mut sorted: Vec<&Subspace> = seeds.iter().collect();
    sorted.sort_by_key(|s| s.dim());
    for s in sorted.into_iter().chain(std::iter::once(&l.full())) {
        l.require_ideal(s)?;
        let last = chain.last().expect("nonempty");
        if s != last && s.contains(last) {
            chain.push(s.clone());
        }
    }
    let mut out = Vec::new();
    for (step, pair) in chain.windows(2).enumerate() {
        let (lower, upper) = (&pair[0], &pair[1]);
        let (m, sq) = action_module(l, &l.full(), upper, lower)?;
        let (series, certs) = m.certified_composition_series(caps, 0xc41e_f000 + step as u64)?;
        for (w, cert) in series.windows(2).zip(certs) {
            out.push((sq.lift_subspace(&w[0]), sq.lift_subspace(&w[1]), cert));
        }
    }
    Ok(out)
}

/// A chief series through the given ideals, with each factor typed.
pub fn chief_series(l: &LieAlgebra, seeds: &[Subspace], caps: &Caps) -> Result<Vec<ChiefFactor>> {
    chief_chain(l, seeds, caps)?
        .into_iter()
        .map(|(lower, upper, certificate)| {
            let kind = factor_kind(l, &upper, &lower, caps)?;
            Ok(ChiefFactor {
                lower,
                upper,
                kind,
                certificate,
            })
        })
        .collect()
}

fn check_factor(l: &LieAlgebra, f: &ChiefFactor) -> Result<()> {
    if f.lower == f.upper || !f.upper.contains(&f.lower) {
        return Err(Error::input("malformed chief factor: lower must be a proper subspace of upper"));
    }
    l.require_ideal(&f.upper)?;
    l.require_ideal(&f.lower)
}

/// `C_L(A/B) = {y : [y, A] ⊆ B}`.
pub fn factor_centraliser(l: &LieAlgebra, f: &ChiefFactor) -> Result<Subspace> {
    check_factor(l, f)?;
    l.relative_centraliser(&f.upper, &f.lower)
}

/// `I_L(A/B) = A + C_L(A/B)`: the elements inducing inner derivations on `A/B`.
pub fn inner_ideal(l: &LieAlgebra, f: &ChiefFactor) -> Result<Subspace> {
    Ok(f.upper.sum(&factor_centraliser(l, f)?))
}

/// Whether `ad x` restricted to `A/B` equals `ad a` restricted to it for some `a ∈ A`.
pub fn induces_inner(l: &LieAlgebra, f: &ChiefFactor, x: &[crate::exactla::Scalar]) -> Result<bool> {
    inner_ideal(l, f)?.contains_vector(x)
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

    #[test]
    fn spin_in_r2() {
        let l = r2(FieldSpec::gf(3));
        let e2 = Subspace::coordinate(l.field(), 2, [1]);
        assert_eq!(spin(&l, vec![l.basis_vector(1)]).unwrap(), e2);
        assert!(spin(&l, vec![l.basis_vector(0)]).unwrap().is_full());
        assert!(spin(&l, vec![]).unwrap().is_zero());
    }

    #[test]
    fn r2_minimal_ideals_all_regimes() {
        let l = r2(FieldSpec::gf(3));
        let e2 = Subspace::coordinate(l.field(), 2, [1]);
        for regime in [Regime::Exhaustive, Regime::Structured, Regime::Hinted(vec![e2.clone()])] {
            let rep = minimal_ideals(&l, &regime, &Caps::default()).unwrap();
            assert_eq!(rep.minimal_ideals, vec![e2.clone()], "{regime:?}");
            assert_eq!(rep.abelian_socle, e2);
        }
    }

    #[test]
    fn abelian_gf2_has_three_minimal_ideals() {
        let l = LieAlgebra::abelian(FieldSpec::gf(2), 2);
        for regime in [Regime::Exhaustive, Regime::Structured] {
            let rep = minimal_ideals(&l, &regime, &Caps::default()).unwrap();
            assert_eq!(rep.minimal_ideals.len(), 3);
            assert!(rep.complete);
            assert!(rep.socle.is_full());
        }
    }

    #[test]
    fn r2_chief_series_and_centraliser() {
        let l = r2(FieldSpec::gf(3));
        let fs = chief_series(&l, &[], &Caps::default()).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|f| f.kind == FactorKind::Abelian));
        let e2 = Subspace::coordinate(l.field(), 2, [1]);
        assert_eq!(fs[0].upper, e2);
        assert_eq!(factor_centraliser(&l, &fs[0]).unwrap(), e2);
        assert!(induces_inner(&l, &fs[0], &l.basis_vector(1)).unwrap());
    }

    #[test]
    fn malformed_factor_rejected() {
        let l = r2(FieldSpec::gf(3));
        let f = ChiefFactor {
            lower: l.full(),
            upper: l.full(),
            kind: FactorKind::Abelian,
            certificate: Certificate::Dimension,
        };
        assert!(factor_centraliser(&l, &f).is_err());
    }
}
