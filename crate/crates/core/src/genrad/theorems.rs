//! The theorem registry: every statement about radicals that the suite
//! checks, each instantiated on one algebra (and on its test ideals,
//! quotients and direct-sum decompositions).

use serde::{Deserialize, Serialize};

use super::analysis::{Analysis, SeriesKind};
use super::components::{centre_of, is_quasi_minimal, is_quasi_simple, is_simple_algebra};
use crate::adjointmod::{factor_kind, is_irreducible_adjoint, FactorKind, Irreducibility};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::liecore::{LieAlgebra, Quotient, Restriction};
use crate::radicals::{frattini, max_semisimple_ideal, maximal_subalgebras};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    NotApplicable { reason: String },
    CapacitySkipped { reason: String },
    Unverified { reason: String },
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail { .. } => "FAIL",
            Outcome::NotApplicable { .. } => "n/a",
            Outcome::CapacitySkipped { .. } => "capacity-skipped",
            Outcome::Unverified { .. } => "unverified",
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub algebra: String,
    pub id: String,
    pub outcome: Outcome,
    /// Instances checked.
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Accumulates the instances of one statement.
pub struct Tally<'a> {
    l: &'a LieAlgebra,
    applied: usize,
    failure: Option<String>,
    skipped: Vec<String>,
    notes: Vec<String>,
    na: Option<String>,
}

impl<'a> Tally<'a> {
    fn new(l: &'a LieAlgebra) -> Self {
        Tally {
            l,
            applied: 0,
            failure: None,
            skipped: Vec::new(),
            notes: Vec::new(),
            na: None,
        }
    }

    fn fail(&mut self, msg: String) {
        if self.failure.is_none() {
            self.failure = Some(msg);
        }
    }

    fn incl(&mut self, a: &Subspace, b: &Subspace, what: &str) {
        self.applied += 1;
        if let Some(v) = a.basis().iter().find(|v| !b.contains_vector(v).unwrap_or(false)) {
            self.fail(format!("{what}: {} lies in the left side only", self.l.format(v)));
        }
    }

    /// `a ⊆ b` for subspaces of another algebra, with its labels.
    fn incl_in(&mut self, m: &LieAlgebra, a: &Subspace, b: &Subspace, what: &str) {
        self.applied += 1;
        if let Some(v) = a.basis().iter().find(|v| !b.contains_vector(v).unwrap_or(false)) {
            self.fail(format!("{what}: {} lies in the left side only", m.format(v)));
        }
    }

    fn eq(&mut self, a: &Subspace, b: &Subspace, what: &str) {
        self.eq_in(self.l, a, b, what)
    }

    fn eq_in(&mut self, m: &LieAlgebra, a: &Subspace, b: &Subspace, what: &str) {
        self.applied += 1;
        if a != b {
            let w = a
                .basis()
                .iter()
                .find(|v| !b.contains_vector(v).unwrap_or(false))
                .map(|v| format!("{} on the left only", m.format(v)))
                .or_else(|| {
                    b.basis()
                        .iter()
                        .find(|v| !a.contains_vector(v).unwrap_or(false))
                        .map(|v| format!("{} on the right only", m.format(v)))
                })
                .unwrap_or_default();
            self.fail(format!(
                "{what}: {} ≠ {} ({w})",
                m.format_subspace(a),
                m.format_subspace(b)
            ));
        }
    }

    fn holds(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.applied += 1;
        if !cond {
            self.fail(what());
        }
    }

    fn na(&mut self, reason: impl Into<String>) {
        if self.na.is_none() {
            self.na = Some(reason.into());
        }
    }

    fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Runs an instance; capacity errors skip just this instance.
    fn guard<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.is_capacity() => {
                self.skipped.push(e.to_string());
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self) -> (Outcome, usize, Vec<String>) {
        let mut notes = self.notes;
        let outcome = if let Some(w) = self.failure {
            Outcome::Fail { witness: w }
        } else if self.applied > 0 {
            if !self.skipped.is_empty() {
                notes.push(format!("{} instance(s) skipped for capacity", self.skipped.len()));
            }
            Outcome::Pass
        } else if let Some(s) = self.skipped.into_iter().next() {
            Outcome::CapacitySkipped { reason: s }
        } else {
            Outcome::NotApplicable {
                reason: self.na.unwrap_or_else(|| "no instance of the hypotheses".into()),
            }
        };
        (outcome, self.applied, notes)
    }
}

type CheckFn = fn(&Analysis, &mut Tally) -> Result<()>;

/// `(id, statement, check)`.
pub const REGISTRY: &[(&str, &str, CheckFn)] = &[
    ("t:nil", "N(I) ⊆ N(L) for nilregular ideals I", t_nil),
    ("t:solv", "R(I) ⊆ R(L) for solregular ideals I", t_solv),
    ("t:minp", "a minimal non-abelian ideal is simple or has large N and R", t_minp),
    ("c:minp", "minimal ideals are abelian, simple or irregular", c_minp),
    ("t:block", "irregular minimal ideals: class N(I) = p-1, dl R(I) = ⌈log2 p⌉", t_block),
    ("t:rad", "R_c(C_L(N)) = Z(N), and = R(C_L(N)) when C_L(N) is regular", t_rad),
    ("c:cent0", "C_L(N) = Z(N) ⊕ S with S semisimple", c_cent0),
    ("l:centre", "Z(K) = Z(N) ∩ K for ideals K ⊆ C_L(N)", l_centre),
    ("l:phi", "Z(A) ⊆ φ(L) for perfect A; Z(A) = A ∩ φ(L) for quasi-minimal A", l_phi),
    ("l:mchar", "quasi-minimal ideals are characteristic", l_mchar),
    ("l:irred", "A/Z(A) minimal ⇒ A = A² + Z(A) and A² quasi-minimal", l_irred),
    ("p:sub", "quasi-minimal A and ideal B: A ⊆ B or [A,B] = 0", p_sub),
    ("c:cent", "E† ⊆ C_L(R)", c_cent),
    ("c:comp", "distinct quasi-minimal components commute; P ∩ Q ⊆ Z(R)", c_comp),
    ("l:sub", "MComp(B) ⊆ MComp(L) ∩ B, equality for regular B", l_sub),
    ("p:soc", "C_L(N) regular ⇒ E† = S², S = E† + Z(N)", p_soc),
    ("t:gennil", "C_L(N†) = Z(N)", t_gennil),
    ("p:double", "N† regular ⇒ N†(N†) = N†", p_double),
    ("p:quotient", "(N† + I)/I ⊆ N†(L/I)", p_quotient),
    ("p:sum", "N†(I ⊕ J) = N†(I) ⊕ N†(J)", p_sum),
    ("p:ideal2", "N†(I) ⊆ N†(L) for nilregular ideals I", p_ideal2),
    ("p:idealdagger", "ideals A ⊆ E† are sums of components plus Z(A)", p_idealdagger),
    ("t:cent", "N† = ∩ (A + C_L(A/B)) over chief factors", t_cent),
    ("c:der", "x ∈ N† iff x induces inner derivations on all chief factors", c_der),
    ("t:centgnil", "N* = N†", t_centgnil),
    ("t:der-rep", "C_L(N*) = Z(N); factors of N*/N are simple or irregular", t_der_rep),
    ("p:gensoc", "C_L(N) nilregular ⇒ N*/N = Soc((N + C_L(N))/N)", p_gensoc),
    ("p:char0", "characteristic 0: N* = N ⊕ S = N + C_L(N)", p_char0),
    ("p:phistar", "characteristic 0: N*(L)/I ⊆ N*(L/I) for I ⊆ N*", p_phistar),
    ("p:starseries", "N*_n: N*(I) ⊆ N*(L) for nilregular I, quotients, direct sums", p_starseries),
    ("c:starseries", "N*_∞: N*_∞(I) ⊆ N*_∞(L) when nilregular, quotients, direct sums", c_starseries),
    ("l:nirred", "L/Z(L) simple ⇒ L = L² + Z(L), L² quasi-simple", l_nirred),
    ("l:sub1", "quasi-simple A and ideal B: A ⊆ B or [A,B] = 0", l_sub1),
    ("l:sub2", "SComp(B) = SComp(L) ∩ B", l_sub2),
    ("p:comp", "P ∈ SComp(L): P ∈ SComp(B) or [P,B] = 0", p_comp),
    ("c:scomp", "distinct quasi-simple components commute", c_scomp),
    ("t:equiv", "E† regular ⇒ Ê = E†", t_equiv),
    ("c:ssoc", "E†, C_L(N) regular ⇒ Ê = S², S = Ê + Z(N)", c_ssoc),
    ("c:gennil2", "N† regular ⇒ C_L(N̂) = Z(N)", c_gennil2),
    ("p:hideal", "N̂(B) ⊆ N̂ for nilregular ideals B", p_hideal),
    ("p:hdouble", "N̂(N̂) = N̂", p_hdouble),
    ("p:phihat", "(N̂ + I)/I ⊆ N̂(L/I)", p_phihat),
    ("t:centhat", "C_L(Ñ) ⊆ Z(N) ⊆ Ñ", t_centhat),
    ("t:phifree", "φ-free, Ñ nilregular: Der(Ñ) preserves N and the simple minimal ideals", t_phifree),
    ("p:equal", "N* ⊆ Ñ", p_equal),
    ("p:factor", "(Ñ + I)/I ⊆ Ñ(L/I), equality for I ⊆ φ(L)", p_factor),
    ("p:phifactor3", "Ñ/φ(L) = N*(L/φ(L))", p_phifactor3),
    ("p:tildesum", "Ñ(I ⊕ J) = Ñ(I) ⊕ Ñ(J)", p_tildesum),
    ("p:prop-i", "I ⊆ φ(Ñ_{n-1}) ⇒ Ñ_n(L/I) = Ñ_n(L)/I", p_prop_i),
    ("p:prop-ii", "N(Ñ_n) ⊆ N(Ñ_{n+1})", p_prop_ii),
    ("p:prop-iii", "Ñ_∞ nilregular ⇒ φ(Ñ_{n+1}) ⊆ φ(Ñ_n)", p_prop_iii),
    ("p:prop-iv", "Ñ_∞ nilregular ⇒ N(Ñ_n) = N(L), Ñ_n ideal", p_prop_iv),
    ("p:prop-v", "N* nilregular ⇒ N* ⊆ Ñ_n", p_prop_v),
    ("p:prop-vi", "Ñ_n nilregular, φ(Ñ_n) = 0 ⇒ Ñ_{n+1} = N*", p_prop_vi),
    ("p:prop-vii", "N* nilregular ⇒ C_L(Ñ_n) = Z(N) for n ≥ 1", p_prop_vii),
    ("p:prop-viii", "characteristic 0: Ñ_n(I) ⊆ Ñ_n(L)", p_prop_viii),
    ("p:prop-ix", "characteristic 0: (Ñ_n + I)/I ⊆ Ñ_n(L/I)", p_prop_ix),
    ("p:prop-x", "Ñ_n(I ⊕ J) = Ñ_n(I) ⊕ Ñ_n(J)", p_prop_x),
    ("c:tildeinf", "Ñ_∞: idempotent, quotients, regularity consequences, sums", c_tildeinf),
    ("t:phi", "core ∩{M maximal : L = M + Ñ} = φ(L)", t_phi),
];

pub fn registry_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|(id, _, _)| *id)
}

pub fn statement(id: &str) -> Option<&'static str> {
    REGISTRY.iter().find(|(i, _, _)| *i == id).map(|(_, s, _)| *s)
}

/// Checks one registered statement on one algebra.
pub fn check_theorem(an: &Analysis, id: &str) -> Result<TheoremResult> {
    let check = REGISTRY
        .iter()
        .find(|(i, _, _)| *i == id)
        .map(|(_, _, f)| *f)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    let mut t = Tally::new(an.algebra());
    let run = check(an, &mut t);
    let (outcome, instances, notes) = match run {
        Ok(()) => t.finish(),
        Err(e) if e.is_capacity() => (Outcome::CapacitySkipped { reason: e.to_string() }, 0, vec![]),
        Err(e) => (Outcome::Fail { witness: format!("error: {e}") }, 0, vec![]),
    };
    Ok(TheoremResult {
        algebra: an.name.clone(),
        id: id.to_string(),
        outcome,
        instances,
        notes,
    })
}

// --- helpers ---------------------------------------------------------------

fn pull_sub(an: &Analysis, u: &Subspace, f: impl FnOnce(&Analysis) -> Result<Subspace>) -> Result<Subspace> {
    let sa = an.restriction(u)?;
    Ok(sa.restriction.pull(&f(&sa.analysis)?))
}

fn commute(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Result<bool> {
    Ok(l.product_space(a, b)?.is_zero())
}

fn ceil_log2(p: u32) -> usize {
    (0..).find(|&k| (1u64 << k) >= p as u64).expect("finite")
}

fn invariant_under(s: &Subspace, maps: &[Matrix]) -> bool {
    maps.iter()
        .all(|m| s.basis().iter().all(|v| s.contains_vector(&m.mul_vec(v)).unwrap_or(false)))
}

/// Nonzero minimal ideals of `L` that are not abelian.
fn nonabelian_minimal(an: &Analysis) -> Result<Vec<Subspace>> {
    let l = an.algebra();
    let mut out = Vec::new();
    for m in an.socle()?.minimal_ideals {
        if !l.product_space(&m, &m)?.is_zero() {
            out.push(m);
        }
    }
    Ok(out)
}

/// `S` with `S/Z(N) = Soc(C_L(N)/Z(N))` (socle of the algebra itself).
fn centraliser_socle(an: &Analysis) -> Result<Subspace> {
    let c = an.cn()?;
    let zn = an.zn()?;
    let sa = an.restriction(&c)?;
    let zloc = sa.restriction.push(&zn)?;
    let qa = sa.analysis.quotient(&zloc)?;
    let soc = qa.analysis.socle()?.socle;
    Ok(sa.restriction.pull(&qa.quotient.pull(&soc)))
}

fn split_check(
    an: &Analysis,
    t: &mut Tally,
    what: &str,
    f: impl Fn(&Analysis) -> Result<Subspace>,
) -> Result<()> {
    let Some((i, j)) = an.direct_split() else {
        t.na("not a direct sum along the coordinates");
        return Ok(());
    };
    let whole = f(an)?;
    let a = pull_sub(an, &i, &f)?;
    let b = pull_sub(an, &j, &f)?;
    t.eq(&whole, &a.sum(&b), what);
    Ok(())
}

// --- radicals-level statements ----------------------------------------------

fn t_nil(an: &Analysis, t: &mut Tally) -> Result<()> {
    let n = an.nil()?;
    for i in an.test_ideals() {
        let Some(reg) = t.guard(an.regularity_of(i))? else { continue };
        if reg.nilregular {
            let ni = pull_sub(an, i, |a| a.nil())?;
            t.incl(&ni, &n, "N(I) ⊆ N(L)");
        }
    }
    t.na("no nilregular proper ideal");
    Ok(())
}

fn t_solv(an: &Analysis, t: &mut Tally) -> Result<()> {
    let r = an.rad()?;
    for i in an.test_ideals() {
        let Some(reg) = t.guard(an.regularity_of(i))? else { continue };
        if reg.solregular {
            let ri = pull_sub(an, i, |a| a.rad())?;
            t.incl(&ri, &r, "R(I) ⊆ R(L)");
        }
    }
    t.na("no solregular proper ideal");
    Ok(())
}

fn t_minp(an: &Analysis, t: &mut Tally) -> Result<()> {
    let p = an.characteristic();
    for i in nonabelian_minimal(an)? {
        let sa = an.restriction(&i)?;
        if is_simple_algebra(&sa.analysis.algebra().clone(), an.caps())? {
            t.holds(true, String::new);
            continue;
        }
        let reg = sa.analysis.regularity()?;
        t.holds(
            p > 0 && reg.class + 1 >= p as usize && (1u128 << reg.derived_length.min(127)) >= p as u128,
            || format!("minimal ideal {} is neither simple nor large", an.algebra().format_subspace(&i)),
        );
    }
    t.na("no non-abelian minimal ideal");
    Ok(())
}

fn c_minp(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    for i in an.socle()?.minimal_ideals {
        let abelian = l.product_space(&i, &i)?.is_zero();
        let ok = abelian
            || is_simple_algebra(an.restriction(&i)?.analysis.algebra(), an.caps())?
            || !an.regularity_of(&i)?.regular;
        t.holds(ok, || format!("minimal ideal {} is regular but not simple", l.format_subspace(&i)));
    }
    Ok(())
}

fn t_block(an: &Analysis, t: &mut Tally) -> Result<()> {
    let p = an.characteristic();
    if p == 0 {
        t.na("characteristic 0");
        return Ok(());
    }
    for i in nonabelian_minimal(an)? {
        let reg = an.regularity_of(&i)?;
        if reg.regular {
            continue;
        }
        t.holds(reg.class == p as usize - 1, || {
            format!("class of N(I) is {}, expected {}", reg.class, p - 1)
        });
        t.holds(reg.derived_length == ceil_log2(p), || {
            format!("derived length of R(I) is {}, expected {}", reg.derived_length, ceil_log2(p))
        });
    }
    t.na("no irregular minimal ideal");
    Ok(())
}

fn t_rad(an: &Analysis, t: &mut Tally) -> Result<()> {
    let rc = an.rc()?;
    let zn = an.zn()?;
    t.eq(&rc.of_s, &zn, "R_c(C_L(N)) = Z(N)");
    if !rc.readings_agree() {
        t.note(format!(
            "readings differ: Der(S)-invariant {} vs Der(L)-invariant {}",
            an.algebra().format_subspace(&rc.of_s),
            an.algebra().format_subspace(&rc.of_l)
        ));
    }
    let c = an.cn()?;
    if let Some(reg) = t.guard(an.regularity_of(&c))? {
        if reg.regular {
            let rcn = pull_sub(an, &c, |a| a.rad())?;
            t.eq(&rc.of_s, &rcn, "R_c(C_L(N)) = R(C_L(N))");
        }
    }
    Ok(())
}

fn c_cent0(an: &Analysis, t: &mut Tally) -> Result<()> {
    let c = an.cn()?;
    let zn = an.zn()?;
    if an.characteristic() == 0 {
        let s = max_semisimple_ideal(an.algebra(), an.caps())?;
        t.eq(&zn.sum(&s), &c, "C_L(N) = Z(N) + S");
        t.holds(zn.intersect(&s).is_zero(), || "Z(N) ∩ S ≠ 0".into());
        return Ok(());
    }
    // char p: C_L(N)/Z(N) is semisimple when C_L(N) is regular
    if !an.regularity_of(&c)?.regular {
        t.na("C_L(N) is irregular");
        return Ok(());
    }
    let sa = an.restriction(&c)?;
    let zloc = sa.restriction.push(&zn)?;
    let qa = sa.analysis.quotient(&zloc)?;
    let r = qa.analysis.rad()?;
    t.eq_in(qa.analysis.algebra(), &r, &qa.analysis.algebra().zero_space(), "R(C_L(N)/Z(N)) = 0");
    Ok(())
}

fn l_centre(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let c = an.cn()?;
    let zn = an.zn()?;
    let mut ks: Vec<Subspace> = an.test_ideals().to_vec();
    ks.push(c.clone());
    ks.push(l.product_space(&c, &c)?);
    for k in ks.iter().filter(|k| !k.is_zero() && c.contains(k)) {
        t.eq(&centre_of(l, k)?, &zn.intersect(k), "Z(K) = Z(N) ∩ K");
    }
    t.na("no nonzero ideal inside C_L(N)");
    Ok(())
}

fn l_phi(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let phi = an.phi()?;
    let comps = an.mcomp()?.components;
    let mut cands: Vec<Subspace> = an.test_ideals().to_vec();
    cands.push(l.full());
    cands.extend(comps.iter().cloned());
    for a in &cands {
        if !a.is_zero() && l.product_space(a, a)? == *a {
            t.incl(&centre_of(l, a)?, &phi, "Z(A) ⊆ φ(L)");
        }
    }
    for p in &comps {
        t.eq(&centre_of(l, p)?, &p.intersect(&phi), "Z(A) = A ∩ φ(L)");
    }
    t.na("no nonzero perfect ideal");
    Ok(())
}

fn l_mchar(an: &Analysis, t: &mut Tally) -> Result<()> {
    let comps = an.mcomp()?.components;
    if comps.is_empty() {
        t.na("no quasi-minimal component");
        return Ok(());
    }
    let ders = an.derivations();
    for p in &comps {
        t.holds(invariant_under(p, ders), || {
            format!("component {} is not Der(L)-invariant", an.algebra().format_subspace(p))
        });
    }
    Ok(())
}

fn l_irred(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let c = an.cn()?;
    let mut cands: Vec<Subspace> = an.test_ideals().to_vec();
    cands.push(l.full());
    for x in an.nstar()?.witnesses {
        cands.push(x.intersect(&c));
    }
    cands.extend(an.mcomp()?.components);
    let mut seen = Vec::new();
    for a in cands.into_iter().filter(|a| !a.is_zero()) {
        if seen.contains(&a) {
            continue;
        }
        seen.push(a.clone());
        let z = centre_of(l, &a)?;
        if z == a {
            continue;
        }
        let q = Quotient::new(l, &z)?;
        let Some(irr) = t.guard(is_irreducible_adjoint(&q.algebra, &q.push(&a), an.caps()))? else {
            continue;
        };
        match irr {
            Irreducibility::Irreducible(_) => {}
            Irreducibility::Reducible(_) => continue,
            Irreducibility::Undetermined(why) => {
                t.skipped.push(why);
                continue;
            }
        }
        let a2 = l.product_space(&a, &a)?;
        t.eq(&a, &a2.sum(&z), "A = A² + Z(A)");
        let qm = if an.mcomp()?.components.contains(&a2) {
            an.component_is_quasi_minimal(&a2)
        } else {
            is_quasi_minimal(l, &a2, an.caps())
        };
        if let Some(qm) = t.guard(qm)? {
            t.holds(qm, || format!("{} is not quasi-minimal", l.format_subspace(&a2)));
        }
    }
    t.na("no ideal A with A/Z(A) minimal in L/Z(A)");
    Ok(())
}

fn component_vs_ideals(an: &Analysis, t: &mut Tally, comps: &[Subspace], what: &str) -> Result<()> {
    let l = an.algebra();
    for p in comps {
        for b in an.test_ideals() {
            let ok = b.contains(p) || commute(l, p, b)?;
            t.holds(ok, || {
                format!("{what}: {} neither inside nor centralising {}", l.format_subspace(p), l.format_subspace(b))
            });
        }
    }
    t.na("no component or no proper ideal");
    Ok(())
}

fn p_sub(an: &Analysis, t: &mut Tally) -> Result<()> {
    let comps = an.mcomp()?.components;
    component_vs_ideals(an, t, &comps, "quasi-minimal")
}

fn c_cent(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let r = an.rad()?;
    t.incl(&an.e_dagger()?, &l.centraliser(&r)?, "E† ⊆ C_L(R)");
    Ok(())
}

fn pairwise(an: &Analysis, t: &mut Tally, comps: &[Subspace], with_radical: bool) -> Result<()> {
    let l = an.algebra();
    let zr = if with_radical { Some(centre_of(l, &an.rad()?)?) } else { None };
    for (a, p) in comps.iter().enumerate() {
        for q in &comps[a + 1..] {
            t.holds(commute(l, p, q)?, || {
                format!("[{}, {}] ≠ 0", l.format_subspace(p), l.format_subspace(q))
            });
            if let Some(zr) = &zr {
                t.incl(&p.intersect(q), zr, "P ∩ Q ⊆ Z(R)");
            }
        }
    }
    t.na("fewer than two components");
    Ok(())
}

fn c_comp(an: &Analysis, t: &mut Tally) -> Result<()> {
    let m = an.mcomp()?;
    let sum = m.components.iter().fold(an.algebra().zero_space(), |a, p| a.sum(p));
    if !m.components.is_empty() {
        t.eq(&m.span, &sum, "E† = ΣP");
    }
    pairwise(an, t, &m.components, true)
}

fn l_sub(an: &Analysis, t: &mut Tally) -> Result<()> {
    let comps = an.mcomp()?.components;
    for b in an.test_ideals() {
        let sa = an.restriction(b)?;
        let Some(sub) = t.guard(sa.analysis.mcomp())? else { continue };
        let pulled: Vec<Subspace> = sub.components.iter().map(|p| sa.restriction.pull(p)).collect();
        for p in &pulled {
            t.holds(comps.contains(p), || {
                format!("component {} of B is not a component of L", an.algebra().format_subspace(p))
            });
        }
        if an.regularity_of(b)?.regular {
            for p in comps.iter().filter(|p| b.contains(p)) {
                t.holds(pulled.contains(p), || {
                    format!("component {} of L inside regular B is not a component of B", an.algebra().format_subspace(p))
                });
            }
        }
    }
    t.na("no proper ideal");
    Ok(())
}

fn p_soc(an: &Analysis, t: &mut Tally) -> Result<()> {
    if !an.regularity_of(&an.cn()?)?.regular {
        t.na("C_L(N) is irregular");
        return Ok(());
    }
    let l = an.algebra();
    let s = centraliser_socle(an)?;
    let e = an.e_dagger()?;
    t.eq(&e, &l.product_space(&s, &s)?, "E† = S²");
    t.eq(&s, &e.sum(&an.zn()?), "S = E† + Z(N)");
    Ok(())
}

fn t_gennil(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    t.eq(&l.centraliser(&an.n_dagger()?)?, &an.zn()?, "C_L(N†) = Z(N)");
    Ok(())
}

fn p_double(an: &Analysis, t: &mut Tally) -> Result<()> {
    let nd = an.n_dagger()?;
    if !an.regularity_of(&nd)?.regular {
        t.na("N† is irregular");
        return Ok(());
    }
    let inner = pull_sub(an, &nd, |a| a.n_dagger())?;
    t.eq(&inner, &nd, "N†(N†) = N†");
    Ok(())
}

/// `(X(L) + I)/I ⊆ X(L/I)` (or equality) over the test ideals.
fn quotient_incl(
    an: &Analysis,
    t: &mut Tally,
    ideals: &[Subspace],
    what: &str,
    f: impl Fn(&Analysis) -> Result<Subspace>,
) -> Result<()> {
    let x = f(an)?;
    for i in ideals {
        let qa = an.quotient(i)?;
        let Some(y) = t.guard(f(&qa.analysis))? else { continue };
        t.incl_in(qa.analysis.algebra(), &qa.quotient.push(&x), &y, what);
    }
    t.na("no proper ideal");
    Ok(())
}

fn p_quotient(an: &Analysis, t: &mut Tally) -> Result<()> {
    quotient_incl(an, t, an.test_ideals(), "(N† + I)/I ⊆ N†(L/I)", |a| a.n_dagger())
}

fn p_sum(an: &Analysis, t: &mut Tally) -> Result<()> {
    split_check(an, t, "N†(I ⊕ J) = N†(I) ⊕ N†(J)", |a| a.n_dagger())
}

fn nilregular_ideal_incl(
    an: &Analysis,
    t: &mut Tally,
    what: &str,
    f: impl Fn(&Analysis) -> Result<Subspace>,
) -> Result<()> {
    let whole = f(an)?;
    for i in an.test_ideals() {
        let Some(reg) = t.guard(an.regularity_of(i))? else { continue };
        if reg.nilregular {
            let Some(sub) = t.guard(pull_sub(an, i, &f))? else { continue };
            t.incl(&sub, &whole, what);
        }
    }
    t.na("no nilregular proper ideal");
    Ok(())
}

fn p_ideal2(an: &Analysis, t: &mut Tally) -> Result<()> {
    nilregular_ideal_incl(an, t, "N†(I) ⊆ N†(L)", |a| a.n_dagger())
}

fn p_idealdagger(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let e = an.e_dagger()?;
    let comps = an.mcomp()?.components;
    let mut cands: Vec<Subspace> = an.test_ideals().to_vec();
    cands.push(e.clone());
    for a in cands.iter().filter(|a| !a.is_zero() && e.contains(a)) {
        let rebuilt = comps
            .iter()
            .filter(|p| a.contains(p))
            .fold(centre_of(l, a)?, |acc, p| acc.sum(p));
        t.eq(a, &rebuilt, "A = ΣP + Z(A)");
    }
    t.na("E† = 0");
    Ok(())
}

fn t_cent(an: &Analysis, t: &mut Tally) -> Result<()> {
    let ci = an.cent_intersection()?;
    let nd = an.n_dagger()?;
    t.incl(&nd, &ci.value, "N† ⊆ ∩(A + C_L(A/B))");
    if an.nstar()?.complete {
        t.eq(&ci.value, &nd, "∩(A + C_L(A/B)) = N†");
    } else {
        t.note("equality not asserted: socle found under hints only");
    }
    Ok(())
}

fn c_der(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let nd = an.n_dagger()?;
    let ci = an.cent_intersection()?;
    let inner_spaces: Vec<Subspace> = ci
        .factors
        .iter()
        .map(|(b, a)| Ok(a.sum(&l.relative_centraliser(a, b)?)))
        .collect::<Result<_>>()?;
    let mut vs: Vec<_> = (0..l.dim()).map(|i| l.basis_vector(i)).collect();
    vs.extend(nd.basis().iter().cloned());
    for v in vs {
        let inner = inner_spaces.iter().all(|s| s.contains_vector(&v).unwrap_or(false));
        let member = nd.contains_vector(&v)?;
        t.holds(inner == member, || {
            format!(
                "{}: inner on all factors = {inner}, in N† = {member}",
                l.format(&v)
            )
        });
    }
    Ok(())
}

fn t_centgnil(an: &Analysis, t: &mut Tally) -> Result<()> {
    t.eq(&an.nstar()?.value, &an.n_dagger()?, "N* = N†");
    if an.nstar_hinted()? {
        t.note("N* certified given hints");
    }
    Ok(())
}

fn t_der_rep(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let star = an.nstar()?;
    let n = an.nil()?;
    t.eq(&l.centraliser(&star.value)?, &an.zn()?, "C_L(N*) = Z(N)");
    for x in &star.witnesses {
        let Some(kind) = t.guard(factor_kind(l, x, &n, an.caps()))? else { continue };
        t.holds(kind != FactorKind::Abelian, || {
            format!("factor {}/N is abelian", l.format_subspace(x))
        });
    }
    Ok(())
}

fn p_gensoc(an: &Analysis, t: &mut Tally) -> Result<()> {
    let c = an.cn()?;
    if !an.regularity_of(&c)?.nilregular {
        t.na("C_L(N) is not nilregular");
        return Ok(());
    }
    let n = an.nil()?;
    let d = n.sum(&c);
    let sa = an.restriction(&d)?;
    let nloc = sa.restriction.push(&n)?;
    let qa = sa.analysis.quotient(&nloc)?;
    let soc = qa.analysis.socle()?.socle;
    let s = sa.restriction.pull(&qa.quotient.pull(&soc));
    t.eq(&s, &an.nstar()?.value, "N*/N = Soc((N + C)/N)");
    Ok(())
}

fn p_char0(an: &Analysis, t: &mut Tally) -> Result<()> {
    if an.characteristic() != 0 {
        t.na("positive characteristic");
        return Ok(());
    }
    let n = an.nil()?;
    let s = max_semisimple_ideal(an.algebra(), an.caps())?;
    let star = an.nstar()?.value;
    t.eq(&star, &n.sum(&s), "N* = N ⊕ S");
    t.holds(n.intersect(&s).is_zero(), || "N ∩ S ≠ 0".into());
    t.eq(&star, &n.sum(&an.cn()?), "N* = N + C_L(N)");
    Ok(())
}

fn p_phistar(an: &Analysis, t: &mut Tally) -> Result<()> {
    if an.characteristic() != 0 {
        t.na("positive characteristic");
        return Ok(());
    }
    let star = an.nstar()?.value;
    let ideals: Vec<Subspace> = an.test_ideals().iter().filter(|i| star.contains(i)).cloned().collect();
    quotient_incl(an, t, &ideals, "N*(L)/I ⊆ N*(L/I)", |a| Ok(a.nstar()?.value))
}

fn star_term(a: &Analysis, k: usize) -> Result<Subspace> {
    Ok(a.series(SeriesKind::Star)?.term(k).clone())
}

fn tilde_term(a: &Analysis, k: usize) -> Result<Subspace> {
    Ok(a.series(SeriesKind::Tilde)?.term(k).clone())
}

/// Part (i) of both series statements is checked as the inclusion its proof
/// establishes; the literal "characteristic ideal" wording already fails for
/// a line in an abelian algebra, which is recorded as a note.
fn literal_char_note(an: &Analysis, t: &mut Tally, s: &Subspace, ambient: &Subspace, ders: &[Matrix]) {
    let l = an.algebra();
    let local = Restriction::new(l, ambient).and_then(|r| Ok((r.push(s)?, r)));
    if let Ok((loc, r)) = local {
        let ok = r.algebra.is_ideal(&loc).unwrap_or(false) && invariant_under(&loc, ders);
        if !ok && !t.notes.iter().any(|n| n.starts_with("literal")) {
            t.note(format!(
                "literal characteristic-ideal reading refuted by {}",
                l.format_subspace(s)
            ));
        }
    }
}

fn p_starseries(an: &Analysis, t: &mut Tally) -> Result<()> {
    // (i), k = 0: N*(I) ⊆ N*(L) for nilregular ideals I
    let star = an.nstar()?.value;
    for i in an.test_ideals() {
        let Some(reg) = t.guard(an.regularity_of(i))? else { continue };
        if reg.nilregular {
            let Some(s) = t.guard(pull_sub(an, i, |a| Ok(a.nstar()?.value)))? else { continue };
            t.incl(&s, &star, "N*(I) ⊆ N*(L)");
            literal_char_note(an, t, &s, &an.algebra().full(), an.derivations());
        }
    }
    // (ii), n = 0 and n = 1
    let series = an.series(SeriesKind::Star)?;
    for n in 0..2 {
        let bound = series.term(n).clone();
        let ideals: Vec<Subspace> = an.test_ideals().iter().filter(|i| bound.contains(i)).cloned().collect();
        quotient_incl(an, t, &ideals, "N*_{n+1}(L)/I ⊆ N*_{n+1}(L/I)", |a| star_term(a, n + 1))?;
    }
    // (iii)
    for k in 0..series.terms.len() {
        split_check(an, t, "N*_k(I ⊕ J) = N*_k(I) ⊕ N*_k(J)", |a| star_term(a, k))?;
    }
    Ok(())
}

fn c_starseries(an: &Analysis, t: &mut Tally) -> Result<()> {
    let fix = an.series(SeriesKind::Star)?.fixpoint().clone();
    let sa = an.restriction(&fix)?;
    for i in an.test_ideals() {
        let Some(f) = t.guard(pull_sub(an, i, |a| Ok(a.series(SeriesKind::Star)?.fixpoint().clone())))? else {
            continue;
        };
        if f.is_zero() || !an.regularity_of(&f)?.nilregular {
            continue;
        }
        t.incl(&f, &fix, "N*_∞(I) ⊆ N*_∞(L)");
        if fix.contains(&f) {
            literal_char_note(an, t, &f, &fix, sa.analysis.derivations());
        }
    }
    let ideals: Vec<Subspace> = an.test_ideals().iter().filter(|i| fix.contains(i)).cloned().collect();
    quotient_incl(an, t, &ideals, "N*_∞(L)/I ⊆ N*_∞(L/I)", |a| {
        Ok(a.series(SeriesKind::Star)?.fixpoint().clone())
    })?;
    split_check(an, t, "N*_∞(I ⊕ J) = N*_∞(I) ⊕ N*_∞(J)", |a| {
        Ok(a.series(SeriesKind::Star)?.fixpoint().clone())
    })
}

// --- quasi-simple components -------------------------------------------------

fn l_nirred(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let mut cands: Vec<Subspace> = an.test_ideals().to_vec();
    cands.push(l.full());
    cands.extend(an.mcomp()?.components);
    let mut seen = Vec::new();
    for a in cands {
        if a.is_zero() || seen.contains(&a) {
            continue;
        }
        seen.push(a.clone());
        let r = Restriction::new(l, &a)?;
        let z = r.algebra.centre();
        let q = Quotient::new(&r.algebra, &z)?;
        let Some(simple) = t.guard(is_simple_algebra(&q.algebra, an.caps()))? else { continue };
        if !simple {
            continue;
        }
        let a2 = l.product_space(&a, &a)?;
        t.eq(&a, &a2.sum(&centre_of(l, &a)?), "L = L² + Z(L)");
        if let Some(qs) = t.guard(is_quasi_simple(l, &a2, an.caps()))? {
            t.holds(qs, || format!("{} is not quasi-simple", l.format_subspace(&a2)));
        }
    }
    t.na("no ideal A with A/Z(A) simple");
    Ok(())
}

fn l_sub1(an: &Analysis, t: &mut Tally) -> Result<()> {
    let comps = an.scomp()?.components;
    component_vs_ideals(an, t, &comps, "quasi-simple")
}

fn l_sub2(an: &Analysis, t: &mut Tally) -> Result<()> {
    let comps = an.scomp()?.components;
    for b in an.test_ideals() {
        let sa = an.restriction(b)?;
        let Some(sub) = t.guard(sa.analysis.scomp())? else { continue };
        let mut pulled: Vec<Subspace> = sub.components.iter().map(|p| sa.restriction.pull(p)).collect();
        let mut inside: Vec<Subspace> = comps.iter().filter(|p| b.contains(p)).cloned().collect();
        pulled.sort_by_key(|s| s.basis().iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        inside.sort_by_key(|s| s.basis().iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        t.holds(pulled == inside, || {
            format!(
                "SComp(B) has {} members, SComp(L) ∩ B has {} (B = {})",
                pulled.len(),
                inside.len(),
                an.algebra().format_subspace(b)
            )
        });
    }
    t.na("no proper ideal");
    Ok(())
}

fn p_comp(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let comps = an.scomp()?.components;
    for b in an.test_ideals() {
        for p in &comps {
            if commute(l, p, b)? {
                t.holds(true, String::new);
                continue;
            }
            let sa = an.restriction(b)?;
            let Some(sub) = t.guard(sa.analysis.scomp())? else { continue };
            let member = b.contains(p) && sub.components.iter().any(|q| sa.restriction.pull(q) == *p);
            t.holds(member, || {
                format!("{} is neither in SComp(B) nor centralises B", l.format_subspace(p))
            });
        }
    }
    t.na("no quasi-simple component or no proper ideal");
    Ok(())
}

fn c_scomp(an: &Analysis, t: &mut Tally) -> Result<()> {
    let comps = an.scomp()?.components;
    pairwise(an, t, &comps, false)
}

fn t_equiv(an: &Analysis, t: &mut Tally) -> Result<()> {
    let e = an.e_dagger()?;
    if !an.regularity_of(&e)?.regular {
        t.na("E† is irregular");
        return Ok(());
    }
    t.eq(&an.e_hat()?, &e, "Ê = E†");
    Ok(())
}

fn c_ssoc(an: &Analysis, t: &mut Tally) -> Result<()> {
    let e = an.e_dagger()?;
    if !an.regularity_of(&e)?.regular || !an.regularity_of(&an.cn()?)?.regular {
        t.na("E† or C_L(N) is irregular");
        return Ok(());
    }
    let l = an.algebra();
    let s = centraliser_socle(an)?;
    let eh = an.e_hat()?;
    t.eq(&eh, &l.product_space(&s, &s)?, "Ê = S²");
    t.eq(&s, &eh.sum(&an.zn()?), "S = Ê + Z(N)");
    Ok(())
}

fn c_gennil2(an: &Analysis, t: &mut Tally) -> Result<()> {
    if !an.regularity_of(&an.n_dagger()?)?.regular {
        t.na("N† is irregular");
        return Ok(());
    }
    t.eq(&an.algebra().centraliser(&an.n_hat()?)?, &an.zn()?, "C_L(N̂) = Z(N)");
    Ok(())
}

fn p_hideal(an: &Analysis, t: &mut Tally) -> Result<()> {
    nilregular_ideal_incl(an, t, "N̂(B) ⊆ N̂", |a| a.n_hat())
}

fn p_hdouble(an: &Analysis, t: &mut Tally) -> Result<()> {
    let nh = an.n_hat()?;
    let inner = pull_sub(an, &nh, |a| a.n_hat())?;
    t.eq(&inner, &nh, "N̂(N̂) = N̂");
    Ok(())
}

fn p_phihat(an: &Analysis, t: &mut Tally) -> Result<()> {
    quotient_incl(an, t, an.test_ideals(), "(N̂ + I)/I ⊆ N̂(L/I)", |a| a.n_hat())
}

// --- the Frattini-based radical ---------------------------------------------

fn t_centhat(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let nt = an.n_tilde()?;
    let zn = an.zn()?;
    t.incl(&l.centraliser(&nt)?, &zn, "C_L(Ñ) ⊆ Z(N)");
    t.incl(&zn, &nt, "Z(N) ⊆ Ñ");
    Ok(())
}

fn t_phifree(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    if !an.phi()?.is_zero() {
        t.na("not φ-free");
        return Ok(());
    }
    let nt = an.ntilde()?;
    if !an.regularity_of(&nt.value)?.nilregular {
        t.na("Ñ is not nilregular");
        return Ok(());
    }
    let sa = an.restriction(&nt.value)?;
    let ders = sa.analysis.derivations();
    let nloc = sa.restriction.push(&an.nil()?)?;
    t.holds(invariant_under(&nloc, ders), || "Der(Ñ) does not preserve N".into());
    for a in &nt.minimal {
        if l.product_space(a, a)?.is_zero() {
            continue;
        }
        let aloc = sa.restriction.push(a)?;
        t.holds(invariant_under(&aloc, ders), || {
            format!("Der(Ñ) does not preserve {}", l.format_subspace(a))
        });
    }
    Ok(())
}

fn p_equal(an: &Analysis, t: &mut Tally) -> Result<()> {
    t.incl(&an.nstar()?.value, &an.n_tilde()?, "N* ⊆ Ñ");
    Ok(())
}

fn p_factor(an: &Analysis, t: &mut Tally) -> Result<()> {
    let nt = an.n_tilde()?;
    let phi = an.phi()?;
    let mut ideals: Vec<Subspace> = an.test_ideals().to_vec();
    if !phi.is_zero() && !ideals.contains(&phi) {
        ideals.push(phi.clone());
    }
    for i in &ideals {
        let qa = an.quotient(i)?;
        let Some(y) = t.guard(qa.analysis.n_tilde())? else { continue };
        let x = qa.quotient.push(&nt);
        let m = qa.analysis.algebra();
        if phi.contains(i) {
            t.eq_in(m, &x, &y, "Ñ(L)/I = Ñ(L/I)");
        } else {
            t.incl_in(m, &x, &y, "(Ñ + I)/I ⊆ Ñ(L/I)");
        }
    }
    t.na("no proper ideal");
    Ok(())
}

fn p_phifactor3(an: &Analysis, t: &mut Tally) -> Result<()> {
    let nt = an.n_tilde()?;
    let phi = an.phi()?;
    let qa = an.quotient(&phi)?;
    let star = qa.analysis.nstar()?.value;
    t.eq_in(qa.analysis.algebra(), &qa.quotient.push(&nt), &star, "Ñ/φ = N*(L/φ)");
    Ok(())
}

fn p_tildesum(an: &Analysis, t: &mut Tally) -> Result<()> {
    split_check(an, t, "Ñ(I ⊕ J) = Ñ(I) ⊕ Ñ(J)", |a| a.n_tilde())
}

fn tilde_len(an: &Analysis) -> Result<usize> {
    Ok(an.series(SeriesKind::Tilde)?.terms.len())
}

fn p_prop_i(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    for n in 1..=2usize {
        let prev = tilde_term(an, n - 1)?;
        let sa = an.restriction(&prev)?;
        let Some(phi_prev) = t.guard(sa.analysis.phi())? else { continue };
        let phi_prev = sa.restriction.pull(&phi_prev);
        let mut ideals: Vec<Subspace> = an
            .test_ideals()
            .iter()
            .filter(|i| phi_prev.contains(i))
            .cloned()
            .collect();
        if !phi_prev.is_zero() && l.is_ideal(&phi_prev)? && !ideals.contains(&phi_prev) {
            ideals.push(phi_prev);
        }
        let term = tilde_term(an, n)?;
        for i in &ideals {
            let qa = an.quotient(i)?;
            let Some(y) = t.guard(tilde_term(&qa.analysis, n))? else { continue };
            t.eq_in(qa.analysis.algebra(), &qa.quotient.push(&term), &y, "Ñ_n(L/I) = Ñ_n(L)/I");
        }
    }
    t.na("no nonzero ideal inside φ(Ñ_{n-1})");
    Ok(())
}

fn p_prop_ii(an: &Analysis, t: &mut Tally) -> Result<()> {
    let len = tilde_len(an)?;
    for n in 0..len - 1 {
        let a = pull_sub(an, &tilde_term(an, n)?, |x| x.nil())?;
        let b = pull_sub(an, &tilde_term(an, n + 1)?, |x| x.nil())?;
        t.incl(&a, &b, "N(Ñ_n) ⊆ N(Ñ_{n+1})");
    }
    Ok(())
}

fn tilde_fix_nilregular(an: &Analysis) -> Result<bool> {
    let fix = an.series(SeriesKind::Tilde)?.fixpoint().clone();
    Ok(an.regularity_of(&fix)?.nilregular)
}

fn p_prop_iii(an: &Analysis, t: &mut Tally) -> Result<()> {
    if !tilde_fix_nilregular(an)? {
        t.na("Ñ_∞ is not nilregular");
        return Ok(());
    }
    let len = tilde_len(an)?;
    for n in 0..len - 1 {
        let Some(a) = t.guard(pull_sub(an, &tilde_term(an, n + 1)?, |x| x.phi()))? else { continue };
        let Some(b) = t.guard(pull_sub(an, &tilde_term(an, n)?, |x| x.phi()))? else { continue };
        t.incl(&a, &b, "φ(Ñ_{n+1}) ⊆ φ(Ñ_n)");
    }
    Ok(())
}

fn p_prop_iv(an: &Analysis, t: &mut Tally) -> Result<()> {
    if !tilde_fix_nilregular(an)? {
        t.na("Ñ_∞ is not nilregular");
        return Ok(());
    }
    let n = an.nil()?;
    for k in 0..tilde_len(an)? {
        let term = tilde_term(an, k)?;
        t.eq(&pull_sub(an, &term, |x| x.nil())?, &n, "N(Ñ_n) = N(L)");
        t.holds(an.algebra().is_ideal(&term)?, || "Ñ_n is not an ideal".into());
    }
    Ok(())
}

fn nstar_nilregular(an: &Analysis) -> Result<bool> {
    Ok(an.regularity_of(&an.nstar()?.value)?.nilregular)
}

fn p_prop_v(an: &Analysis, t: &mut Tally) -> Result<()> {
    if !nstar_nilregular(an)? {
        t.na("N* is not nilregular");
        return Ok(());
    }
    let star = an.nstar()?.value;
    for k in 0..tilde_len(an)? {
        t.incl(&star, &tilde_term(an, k)?, "N* ⊆ Ñ_n");
    }
    Ok(())
}

fn p_prop_vi(an: &Analysis, t: &mut Tally) -> Result<()> {
    let star = an.nstar()?.value;
    for k in 0..tilde_len(an)? - 1 {
        let term = tilde_term(an, k)?;
        let sa = an.restriction(&term)?;
        if !sa.analysis.regularity()?.nilregular {
            continue;
        }
        let Some(phi) = t.guard(sa.analysis.phi())? else { continue };
        if phi.is_zero() {
            t.eq(&tilde_term(an, k + 1)?, &star, "Ñ_{n+1} = N*");
        }
    }
    t.na("no nilregular φ-free term");
    Ok(())
}

fn p_prop_vii(an: &Analysis, t: &mut Tally) -> Result<()> {
    if !nstar_nilregular(an)? {
        t.na("N* is not nilregular");
        return Ok(());
    }
    let zn = an.zn()?;
    for k in 1..tilde_len(an)? {
        t.eq(&an.algebra().centraliser(&tilde_term(an, k)?)?, &zn, "C_L(Ñ_n) = Z(N)");
    }
    Ok(())
}

fn p_prop_viii(an: &Analysis, t: &mut Tally) -> Result<()> {
    if an.characteristic() != 0 {
        t.na("positive characteristic");
        return Ok(());
    }
    for k in 1..tilde_len(an)? {
        let whole = tilde_term(an, k)?;
        for i in an.test_ideals() {
            let Some(s) = t.guard(pull_sub(an, i, |a| tilde_term(a, k)))? else { continue };
            t.incl(&s, &whole, "Ñ_n(I) ⊆ Ñ_n(L)");
        }
    }
    t.na("no proper ideal");
    Ok(())
}

fn p_prop_ix(an: &Analysis, t: &mut Tally) -> Result<()> {
    if an.characteristic() != 0 {
        t.na("positive characteristic");
        return Ok(());
    }
    for k in 1..tilde_len(an)? {
        quotient_incl(an, t, an.test_ideals(), "(Ñ_n + I)/I ⊆ Ñ_n(L/I)", |a| tilde_term(a, k))?;
    }
    Ok(())
}

fn p_prop_x(an: &Analysis, t: &mut Tally) -> Result<()> {
    for k in 0..tilde_len(an)? {
        split_check(an, t, "Ñ_n(I ⊕ J) = Ñ_n(I) ⊕ Ñ_n(J)", |a| tilde_term(a, k))?;
    }
    Ok(())
}

fn c_tildeinf(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    let fix_of = |a: &Analysis| Ok(a.series(SeriesKind::Tilde)?.fixpoint().clone());
    let fix = fix_of(an)?;
    let sa = an.restriction(&fix)?;
    // idempotence
    t.holds(sa.analysis.n_tilde()?.is_full(), || "Ñ(Ñ_∞) ≠ Ñ_∞".into());
    // (i)
    if let Some(phi) = t.guard(sa.analysis.phi())? {
        let phi = sa.restriction.pull(&phi);
        let ideals: Vec<Subspace> = an.test_ideals().iter().filter(|i| phi.contains(i)).cloned().collect();
        for i in &ideals {
            let qa = an.quotient(i)?;
            let Some(y) = t.guard(fix_of(&qa.analysis))? else { continue };
            t.eq_in(qa.analysis.algebra(), &qa.quotient.push(&fix), &y, "Ñ_∞(L/I) = Ñ_∞(L)/I");
        }
    }
    let fix_reg = an.regularity_of(&fix)?;
    // (ii)
    if fix_reg.nilregular {
        t.eq(&pull_sub(an, &fix, |x| x.nil())?, &an.nil()?, "N(Ñ_∞) = N(L)");
        t.holds(l.is_ideal(&fix)?, || "Ñ_∞ is not an ideal".into());
        // (iv)
        if let Some(phi) = t.guard(sa.analysis.phi())? {
            if phi.is_zero() {
                t.eq(&fix, &an.nstar()?.value, "Ñ_∞ = N*");
            }
        }
    }
    // (iii), (v)
    if nstar_nilregular(an)? {
        t.incl(&an.nstar()?.value, &fix, "N* ⊆ Ñ_∞");
        t.eq(&l.centraliser(&fix)?, &an.zn()?, "C_L(Ñ_∞) = Z(N)");
    }
    // (vi), (vii)
    if an.characteristic() == 0 {
        for i in an.test_ideals() {
            if let Some(s) = t.guard(pull_sub(an, i, fix_of))? {
                t.incl(&s, &fix, "Ñ_∞(I) ⊆ Ñ_∞(L)");
            }
        }
        quotient_incl(an, t, an.test_ideals(), "(Ñ_∞ + I)/I ⊆ Ñ_∞(L/I)", fix_of)?;
    }
    // (viii)
    split_check(an, t, "Ñ_∞(I ⊕ J) = Ñ_∞(I) ⊕ Ñ_∞(J)", fix_of)
}

fn t_phi(an: &Analysis, t: &mut Tally) -> Result<()> {
    let l = an.algebra();
    if !l.field().is_finite() {
        t.na("maximal subalgebras are enumerated over finite fields only");
        return Ok(());
    }
    let nt = an.n_tilde()?;
    let maximal = maximal_subalgebras(l, an.caps())?;
    let p = maximal
        .iter()
        .filter(|m| m.sum(&nt).is_full())
        .fold(l.full(), |acc, m| acc.intersect(m));
    let phi = frattini(l, an.caps(), None)?.ideal;
    t.eq(&l.core(&p)?, &phi, "core ∩{M : L = M + Ñ} = φ(L)");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::corpus::builders::{gl2, r2};
    use crate::corpus::Hints;
    use crate::exactla::FieldSpec;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<_> = registry_ids().collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(ids.contains(&"p:prop-x"));
    }

    #[test]
    fn gennil_on_gl2() {
        let an = Analysis::new("gl2", gl2(FieldSpec::RATIONALS), Caps::default(), Hints::default());
        let r = check_theorem(&an, "t:gennil").unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn rad_on_r2_and_unknown_id() {
        let an = Analysis::new("r2", r2(FieldSpec::gf(3)), Caps::default(), Hints::default());
        assert_eq!(check_theorem(&an, "t:rad").unwrap().outcome, Outcome::Pass);
        assert!(matches!(check_theorem(&an, "no-such-id"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn whole_registry_on_small_algebras() {
        for l in [r2(FieldSpec::gf(3)), gl2(FieldSpec::gf(3))] {
            let an = Analysis::new("x", l, Caps::default(), Hints::default());
            for id in registry_ids() {
                let r = check_theorem(&an, id).unwrap();
                assert!(!r.outcome.is_fail(), "{id}: {:?}", r.outcome);
            }
        }
    }
}
