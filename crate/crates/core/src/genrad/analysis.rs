//! Lazily computed radicals of one algebra, with cached analyses of its
//! ideals and quotients.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::components::{is_quasi_minimal, is_quasi_simple, ComponentKind, ComponentSet};
use crate::adjointmod::{chief_chain, socle_between, Regime, RegimeTag, SocleReport};
use crate::config::Caps;
use crate::corpus::{Fixture, Hints};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::liecore::{LieAlgebra, Quotient, Restriction};
use crate::radicals::{
    characteristic_radical, derivation_algebra, frattini, nilradical, solvable_radical, CharRadical,
    Frattini, FrattiniMethod, RegularityVerdict,
};

/// `N*` together with the minimal ideals `X/N` of `L/N` that make it up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStar {
    pub value: Subspace,
    pub witnesses: Vec<Subspace>,
    pub regime: RegimeTag,
    pub complete: bool,
}

/// `Ñ` with the Frattini data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NTilde {
    pub value: Subspace,
    pub frattini: Frattini,
    /// Preimages of the minimal ideals of `L/φ(L)`.
    pub minimal: Vec<Subspace>,
}

/// A descending radical series ending in its fixpoint (listed twice).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub terms: Vec<Subspace>,
}

impl Series {
    pub fn fixpoint(&self) -> &Subspace {
        self.terms.last().expect("nonempty series")
    }

    /// Term `n` (the fixpoint for `n` past the end).
    pub fn term(&self, n: usize) -> &Subspace {
        self.terms.get(n).unwrap_or_else(|| self.fixpoint())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Star,
    Tilde,
}

/// `∩ (A + C_L(A/B))` over a chief series through `Z(N) ⊆ N ⊆ N†`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentIntersection {
    pub value: Subspace,
    /// Chief factors `(B, A)`.
    pub factors: Vec<(Subspace, Subspace)>,
}

pub struct SubAnalysis {
    pub restriction: Restriction,
    pub analysis: Analysis,
}

pub struct QuotAnalysis {
    pub quotient: Quotient,
    pub analysis: Analysis,
}

type Cell<T> = OnceLock<Result<T>>;

fn cached<T: Clone>(cell: &Cell<T>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(f).clone()
}

pub struct Analysis {
    pub name: String,
    l: LieAlgebra,
    caps: Caps,
    hints: Hints,
    nil: Cell<(Subspace, bool)>,
    rad: Cell<(Subspace, bool)>,
    socle: Cell<SocleReport>,
    nstar: Cell<NStar>,
    mcomp: Cell<ComponentSet>,
    scomp: Cell<ComponentSet>,
    phi: Cell<Frattini>,
    ntilde: Cell<NTilde>,
    star: Cell<Series>,
    tilde: Cell<Series>,
    cent: Cell<CentIntersection>,
    rc: Cell<CharRadical>,
    ders: OnceLock<Vec<Matrix>>,
    ideals: OnceLock<Vec<Subspace>>,
    restrictions: Mutex<HashMap<Subspace, Arc<SubAnalysis>>>,
    quotients: Mutex<HashMap<Subspace, Arc<QuotAnalysis>>>,
}

impl Analysis {
    pub fn new(name: impl Into<String>, l: LieAlgebra, caps: Caps, hints: Hints) -> Self {
        Analysis {
            name: name.into(),
            l,
            caps,
            hints,
            nil: OnceLock::new(),
            rad: OnceLock::new(),
            socle: OnceLock::new(),
            nstar: OnceLock::new(),
            mcomp: OnceLock::new(),
            scomp: OnceLock::new(),
            phi: OnceLock::new(),
            ntilde: OnceLock::new(),
            star: OnceLock::new(),
            tilde: OnceLock::new(),
            cent: OnceLock::new(),
            rc: OnceLock::new(),
            ders: OnceLock::new(),
            ideals: OnceLock::new(),
            restrictions: Mutex::new(HashMap::new()),
            quotients: Mutex::new(HashMap::new()),
        }
    }

    pub fn of_fixture(f: &Fixture, caps: &Caps) -> Self {
        Self::new(f.name.clone(), f.algebra.clone(), *caps, f.hints.clone())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.l
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn hints(&self) -> &Hints {
        &self.hints
    }

    pub fn characteristic(&self) -> u32 {
        self.l.field().characteristic()
    }

    // --- classical radicals -------------------------------------------------

    /// `N(L)`; the flag records that a hint was used.
    pub fn nil_with_provenance(&self) -> Result<(Subspace, bool)> {
        cached(&self.nil, || match nilradical(&self.l, &self.caps) {
            Ok(n) => Ok((n, false)),
            Err(e) if e.is_capacity() => match &self.hints.nilradical {
                Some(h) => {
                    self.l.require_ideal(h)?;
                    if self.l.nilpotency_class(h)?.is_none() {
                        return Err(Error::Certificate("hinted nilradical is not nilpotent".into()));
                    }
                    Ok((h.clone(), true))
                }
                None => Err(e),
            },
            Err(e) => Err(e),
        })
    }

    pub fn nil(&self) -> Result<Subspace> {
        Ok(self.nil_with_provenance()?.0)
    }

    pub fn rad_with_provenance(&self) -> Result<(Subspace, bool)> {
        cached(&self.rad, || match solvable_radical(&self.l, &self.caps) {
            Ok(r) => Ok((r, false)),
            Err(e) if e.is_capacity() => match &self.hints.solvable_radical {
                Some(h) => {
                    self.l.require_ideal(h)?;
                    if self.l.derived_length(h)?.is_none() {
                        return Err(Error::Certificate("hinted radical is not solvable".into()));
                    }
                    Ok((h.clone(), true))
                }
                None => Err(e),
            },
            Err(e) => Err(e),
        })
    }

    pub fn rad(&self) -> Result<Subspace> {
        Ok(self.rad_with_provenance()?.0)
    }

    pub fn centre(&self) -> Subspace {
        self.l.centre()
    }

    /// `C_L(N)`.
    pub fn cn(&self) -> Result<Subspace> {
        self.l.centraliser(&self.nil()?)
    }

    /// `Z(N)`.
    pub fn zn(&self) -> Result<Subspace> {
        Ok(self.nil()?.intersect(&self.cn()?))
    }

    /// Regularity of the algebra itself.
    pub fn regularity(&self) -> Result<RegularityVerdict> {
        let class = self.l.nilpotency_class(&self.nil()?)?.expect("nilpotent");
        let dl = self.l.derived_length(&self.rad()?)?.expect("solvable");
        Ok(RegularityVerdict::from_numbers(self.characteristic(), class, dl))
    }

    /// Regularity of an ideal (or subalgebra) `u`, judged intrinsically.
    pub fn regularity_of(&self, u: &Subspace) -> Result<RegularityVerdict> {
        self.restriction(u)?.analysis.regularity()
    }

    /// `R_c(C_L(N))` in both readings.
    pub fn rc(&self) -> Result<CharRadical> {
        cached(&self.rc, || characteristic_radical(&self.l, &self.cn()?, &self.caps))
    }

    pub fn derivations(&self) -> &[Matrix] {
        self.ders.get_or_init(|| {
            derivation_algebra(&self.l)
                .into_iter()
                .map(|d| d.matrix)
                .collect()
        })
    }

    // --- regimes and socles -------------------------------------------------

    fn regime(&self, quotient_dim: usize, hints: Option<Vec<Subspace>>) -> Regime {
        if let Some(q) = self.l.field().order() {
            if (q as f64).powi(quotient_dim as i32) <= self.caps.enum_cap as f64 {
                return Regime::Exhaustive;
            }
        }
        match hints {
            Some(h) if !h.is_empty() => Regime::Hinted(h),
            _ => Regime::Structured,
        }
    }

    /// Hinted minimal ideals of `L` lifted over `lower` and kept when they sit
    /// strictly between `lower` and `upper`.
    fn hints_between(&self, upper: &Subspace, lower: &Subspace) -> Option<Vec<Subspace>> {
        let hs = self.hints.minimal_ideals.as_ref()?;
        Some(
            hs.iter()
                .map(|h| h.sum(lower))
                .filter(|h| upper.contains(h) && h != lower)
                .collect(),
        )
    }

    /// Minimal ideals and socle of `L`.
    pub fn socle(&self) -> Result<SocleReport> {
        cached(&self.socle, || {
            let full = self.l.full();
            let zero = self.l.zero_space();
            let regime = self.regime(self.l.dim(), self.hints_between(&full, &zero));
            socle_between(&self.l, &full, &zero, &regime, &self.caps)
        })
    }

    // --- generalised radicals -----------------------------------------------

    /// `N*/N = Soc_{L/N}((N + C_L(N))/N)`.
    pub fn nstar(&self) -> Result<NStar> {
        cached(&self.nstar, || {
            let n = self.nil()?;
            let upper = n.sum(&self.cn()?);
            if upper == n {
                return Ok(NStar {
                    value: n,
                    witnesses: Vec::new(),
                    regime: RegimeTag::Structured,
                    complete: true,
                });
            }
            let regime = self.regime(upper.dim() - n.dim(), self.hints_between(&upper, &n));
            let rep = socle_between(&self.l, &upper, &n, &regime, &self.caps)?;
            Ok(NStar {
                value: rep.socle,
                witnesses: rep.minimal_ideals,
                regime: rep.regime,
                complete: rep.complete,
            })
        })
    }

    pub fn nstar_hinted(&self) -> Result<bool> {
        let s = self.nstar()?;
        Ok((s.regime == RegimeTag::Hinted && !s.complete) || self.nil_with_provenance()?.1)
    }

    /// Components `(X ∩ C_L(N))²` recovered from the witnesses of `N*`.
    pub fn mcomp(&self) -> Result<ComponentSet> {
        cached(&self.mcomp, || {
            let c = self.cn()?;
            let star = self.nstar()?;
            let mut components: Vec<Subspace> = Vec::new();
            for x in &star.witnesses {
                let y = x.intersect(&c);
                let p = self.l.product_space(&y, &y)?;
                if !p.is_zero() && !components.contains(&p) {
                    components.push(p);
                }
            }
            let span = components
                .iter()
                .fold(self.l.zero_space(), |acc, p| acc.sum(p));
            Ok(ComponentSet {
                kind: ComponentKind::MComp,
                components,
                span,
                hinted: self.nstar_hinted()?,
            })
        })
    }

    /// Whether a component passes the quasi-minimality test; a capacity
    /// verdict is accepted for hinted minimal ideals.
    pub fn component_is_quasi_minimal(&self, p: &Subspace) -> Result<bool> {
        match is_quasi_minimal(&self.l, p, &self.caps) {
            Err(e) if e.is_capacity() => {
                let hinted = self
                    .hints
                    .minimal_ideals
                    .as_ref()
                    .is_some_and(|h| h.contains(p));
                if hinted && self.l.product_space(p, p)? == *p {
                    Ok(true)
                } else {
                    Err(e)
                }
            }
            other => other,
        }
    }

    pub fn e_dagger(&self) -> Result<Subspace> {
        Ok(self.mcomp()?.span)
    }

    /// `N† = N + E†`.
    pub fn n_dagger(&self) -> Result<Subspace> {
        Ok(self.nil()?.sum(&self.e_dagger()?))
    }

    pub fn scomp(&self) -> Result<ComponentSet> {
        cached(&self.scomp, || {
            let m = self.mcomp()?;
            let mut components = Vec::new();
            for p in &m.components {
                if is_quasi_simple(&self.l, p, &self.caps)? {
                    components.push(p.clone());
                }
            }
            let span = components
                .iter()
                .fold(self.l.zero_space(), |acc, p| acc.sum(p));
            Ok(ComponentSet {
                kind: ComponentKind::SComp,
                components,
                span,
                hinted: m.hinted,
            })
        })
    }

    pub fn e_hat(&self) -> Result<Subspace> {
        Ok(self.scomp()?.span)
    }

    /// `N̂ = N + Ê`.
    pub fn n_hat(&self) -> Result<Subspace> {
        Ok(self.nil()?.sum(&self.e_hat()?))
    }

    pub fn frattini(&self) -> Result<Frattini> {
        cached(&self.phi, || frattini(&self.l, &self.caps, self.hints.frattini.as_ref()))
    }

    pub fn phi(&self) -> Result<Subspace> {
        Ok(self.frattini()?.ideal)
    }

    /// `Ñ/φ(L) = Soc(L/φ(L))`.
    pub fn ntilde(&self) -> Result<NTilde> {
        cached(&self.ntilde, || {
            let fr = self.frattini()?;
            let q = Quotient::new(&self.l, &fr.ideal)?;
            let hints = self.hints_between(&self.l.full(), &fr.ideal).map(|hs| {
                hs.iter().map(|h| q.push(h)).collect::<Vec<_>>()
            });
            let regime = self.regime(q.algebra.dim(), hints);
            let zero = q.algebra.zero_space();
            let rep = socle_between(&q.algebra, &q.algebra.full(), &zero, &regime, &self.caps)?;
            Ok(NTilde {
                value: q.pull(&rep.socle),
                frattini: fr,
                minimal: rep.minimal_ideals.iter().map(|m| q.pull(m)).collect(),
            })
        })
    }

    pub fn n_tilde(&self) -> Result<Subspace> {
        Ok(self.ntilde()?.value)
    }

    pub fn ntilde_hinted(&self) -> Result<bool> {
        Ok(self.frattini()?.method == FrattiniMethod::Hinted)
    }

    /// `N*_n` or `Ñ_n` down to the fixpoint, which is repeated once.
    pub fn series(&self, kind: SeriesKind) -> Result<Series> {
        let cell = match kind {
            SeriesKind::Star => &self.star,
            SeriesKind::Tilde => &self.tilde,
        };
        cached(cell, || {
            let full = self.l.full();
            let next = match kind {
                SeriesKind::Star => self.nstar()?.value,
                SeriesKind::Tilde => self.n_tilde()?,
            };
            if next == full {
                return Ok(Series {
                    terms: vec![full.clone(), full],
                });
            }
            let sub = self.restriction(&next)?;
            let rest = sub.analysis.series(kind)?;
            let mut terms = vec![full];
            terms.extend(rest.terms.iter().map(|t| sub.restriction.pull(t)));
            Ok(Series { terms })
        })
    }

    /// `∩ (A + C_L(A/B))` over a chief series refined through `Z(N) ⊆ N ⊆ N†`.
    pub fn cent_intersection(&self) -> Result<CentIntersection> {
        cached(&self.cent, || {
            let seeds = [self.zn()?, self.nil()?, self.n_dagger()?];
            let chain = chief_chain(&self.l, &seeds, &self.caps)?;
            let mut value = self.l.full();
            let mut factors = Vec::new();
            for (lower, upper, _) in chain {
                value = value.intersect(&upper.sum(&self.l.relative_centraliser(&upper, &lower)?));
                factors.push((lower, upper));
            }
            Ok(CentIntersection { value, factors })
        })
    }

    // --- derived algebras ---------------------------------------------------

    /// Analysis of the subalgebra `u` as an algebra in its own right. Hinted
    /// minimal ideals of `L` inside `u` are passed on.
    pub fn restriction(&self, u: &Subspace) -> Result<Arc<SubAnalysis>> {
        if let Some(s) = self.restrictions.lock().expect("lock").get(u) {
            return Ok(s.clone());
        }
        let r = Restriction::new(&self.l, u)?;
        let hints = if u.is_full() { self.hints.clone() } else { Hints::default() };
        let analysis = Analysis::new(
            format!("{}|{}", self.name, u.dim()),
            r.algebra.clone(),
            self.caps,
            hints,
        );
        let s = Arc::new(SubAnalysis {
            restriction: r,
            analysis,
        });
        let kept = self
            .restrictions
            .lock()
            .expect("lock")
            .entry(u.clone())
            .or_insert(s)
            .clone();
        Ok(kept)
    }

    /// Analysis of `L/I`; `φ(L)/I` is passed on as a hint when `I ⊆ φ(L)`.
    pub fn quotient(&self, i: &Subspace) -> Result<Arc<QuotAnalysis>> {
        if let Some(s) = self.quotients.lock().expect("lock").get(i) {
            return Ok(s.clone());
        }
        let q = Quotient::new(&self.l, i)?;
        let mut hints = Hints::default();
        if i.is_zero() {
            hints = self.hints.clone();
        }
        let analysis = Analysis::new(
            format!("{}/{}", self.name, i.dim()),
            q.algebra.clone(),
            self.caps,
            hints,
        );
        let s = Arc::new(QuotAnalysis { quotient: q, analysis });
        let kept = self
            .quotients
            .lock()
            .expect("lock")
            .entry(i.clone())
            .or_insert(s)
            .clone();
        Ok(kept)
    }

    /// A small family of ideals used to instantiate statements quantified over
    /// ideals: centre, nilradical, radical, `C_L(N)`, `Z(N)`, the terms of the
    /// lower central and derived series and the minimal ideals, without `0`
    /// and `L`.
    pub fn test_ideals(&self) -> &[Subspace] {
        self.ideals.get_or_init(|| {
            let l = &self.l;
            let full = l.full();
            let mut out: Vec<Subspace> = vec![self.centre()];
            out.extend(self.nil().ok());
            out.extend(self.rad().ok());
            out.extend(self.cn().ok());
            out.extend(self.zn().ok());
            out.extend(l.lower_central_series(&full).unwrap_or_default());
            out.extend(l.derived_series(&full).unwrap_or_default());
            if let Ok(s) = self.socle() {
                out.extend(s.minimal_ideals);
            }
            let mut seen = Vec::new();
            for s in out {
                if !s.is_zero() && !s.is_full() && !seen.contains(&s) {
                    seen.push(s);
                }
            }
            seen.sort_by_key(Subspace::dim);
            seen
        })
    }

    /// `L = I ⊕ J` along a coordinate split, if there is one.
    pub fn direct_split(&self) -> Option<(Subspace, Subspace)> {
        let l = &self.l;
        let n = l.dim();
        (1..n).find_map(|k| {
            let i = Subspace::coordinate(l.field(), n, 0..k);
            let j = Subspace::coordinate(l.field(), n, k..n);
            let ok = l.is_ideal(&i).ok()?
                && l.is_ideal(&j).ok()?
                && l.product_space(&i, &j).ok()?.is_zero();
            ok.then_some((i, j))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builders::{gl2, heisenberg, r2, sl2};
    use crate::exactla::FieldSpec;

    fn an(l: LieAlgebra) -> Analysis {
        Analysis::new("t", l, Caps::default(), Hints::default())
    }

    #[test]
    fn gl2_generalised_radicals() {
        let a = an(gl2(FieldSpec::RATIONALS));
        let full = a.algebra().full();
        assert_eq!(a.nstar().unwrap().value, full);
        assert_eq!(a.n_dagger().unwrap(), full);
        assert_eq!(a.n_hat().unwrap(), full);
        assert_eq!(a.mcomp().unwrap().components, vec![a.algebra().derived_algebra()]);
        assert_eq!(a.cent_intersection().unwrap().value, full);
    }

    #[test]
    fn sl2_socle_is_itself() {
        let a = an(sl2(FieldSpec::gf(5)));
        assert!(a.socle().unwrap().socle.is_full());
        assert!(a.nstar().unwrap().value.is_full());
    }

    #[test]
    fn r2_radicals_and_series() {
        let a = an(r2(FieldSpec::gf(3)));
        let e2 = Subspace::coordinate(a.algebra().field(), 2, [1]);
        assert_eq!(a.nstar().unwrap().value, e2);
        assert_eq!(a.n_tilde().unwrap(), e2);
        assert_eq!(a.cent_intersection().unwrap().value, e2);
        let s = a.series(SeriesKind::Star).unwrap();
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.fixpoint(), &e2);
    }

    #[test]
    fn heisenberg_tilde_series() {
        let a = an(heisenberg(FieldSpec::gf(2)));
        let s = a.series(SeriesKind::Tilde).unwrap();
        assert_eq!(s.terms.len(), 2);
        assert!(s.fixpoint().is_full());
    }

    #[test]
    fn direct_split_of_a_sum() {
        let f = FieldSpec::gf(3);
        let a = an(r2(f).direct_sum(&sl2(f)).unwrap());
        let (i, j) = a.direct_split().unwrap();
        assert_eq!((i.dim(), j.dim()), (2, 3));
    }
}
