//! A full record of the radicals of one algebra.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::analysis::{Analysis, SeriesKind};
use super::theorems::{check_theorem, TheoremResult};
use crate::config::Caps;
use crate::corpus::doc::{encode_subspace, SubspaceDoc};
use crate::error::Result;
use crate::exactla::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Proved,
    CertifiedGivenHints,
    Unavailable,
}

impl Provenance {
    fn tag(&self) -> &'static str {
        match self {
            Provenance::Proved => "proved",
            Provenance::CertifiedGivenHints => "certified given hints",
            Provenance::Unavailable => "unavailable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<SubspaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Entry {
    pub fn is_available(&self) -> bool {
        self.provenance != Provenance::Unavailable
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub name: String,
    pub characteristic: u32,
    pub dim: usize,
    pub labels: Vec<String>,
    pub caps: Caps,
    pub centre: Entry,
    pub nilradical: Entry,
    pub solvable_radical: Entry,
    /// `R_c(C_L(N))` with invariance under `Der(C_L(N))`.
    pub rc: Entry,
    /// The same with invariance under `Der(L)`.
    pub rc_of_l: Entry,
    pub phi: Entry,
    pub e_dagger: Entry,
    pub e_hat: Entry,
    pub n_dagger: Entry,
    pub n_star: Entry,
    pub n_hat: Entry,
    pub n_tilde: Entry,
    pub star_series: Vec<Entry>,
    pub tilde_series: Vec<Entry>,
    pub star_infty: Entry,
    pub tilde_infty: Entry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical_class: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_derived_length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilregular: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solregular: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub theorem_results: Vec<TheoremResult>,
}

fn entry(an: &Analysis, value: Result<Subspace>, hinted: Result<bool>) -> Result<Entry> {
    match value.and_then(|s| Ok((s, hinted?))) {
        Ok((s, hinted)) => Ok(Entry {
            provenance: if hinted {
                Provenance::CertifiedGivenHints
            } else {
                Provenance::Proved
            },
            dim: Some(s.dim()),
            basis: Some(encode_subspace(&s)),
            display: Some(an.algebra().format_subspace(&s)),
            note: None,
        }),
        Err(e) if e.is_capacity() => Ok(unavailable(e.to_string())),
        Err(e) => Err(e),
    }
}

fn unavailable(note: String) -> Entry {
    Entry {
        provenance: Provenance::Unavailable,
        dim: None,
        basis: None,
        display: None,
        note: Some(note),
    }
}

/// Pads to a fixed column, not counting combining accents (as in `N̂`).
fn pad(name: &str) -> String {
    let width = name.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count();
    format!("{name}{}", " ".repeat(22usize.saturating_sub(width)))
}

impl RadicalReport {
    /// Computes every radical; capacity failures leave the entry unavailable.
    /// `theorems` lists the registry ids to evaluate as well.
    pub fn build(an: &Analysis, theorems: &[&str]) -> Result<Self> {
        let l = an.algebra();
        let nil_h = || Ok(an.nil_with_provenance()?.1);
        let rad_h = || Ok(an.rad_with_provenance()?.1);
        let star_h = || an.nstar_hinted();
        let hat_h = || Ok(an.scomp()?.hinted);
        let tilde_h = || Ok(an.ntilde_hinted()? || an.nstar_hinted()?);
        let rc = an.rc();
        let series = |kind: SeriesKind, hinted: Result<bool>| -> Result<(Vec<Entry>, Entry)> {
            match an.series(kind) {
                Ok(s) => {
                    let h = hinted?;
                    let terms = s
                        .terms
                        .iter()
                        .map(|t| entry(an, Ok(t.clone()), Ok(h)))
                        .collect::<Result<Vec<_>>>()?;
                    let last = entry(an, Ok(s.fixpoint().clone()), Ok(h))?;
                    Ok((terms, last))
                }
                Err(e) if e.is_capacity() => Ok((Vec::new(), unavailable(e.to_string()))),
                Err(e) => Err(e),
            }
        };
        let (star_series, star_infty) = series(SeriesKind::Star, star_h())?;
        let (tilde_series, tilde_infty) = series(SeriesKind::Tilde, tilde_h())?;
        let reg = an.regularity().ok();
        let phi = entry(an, an.phi(), an.ntilde_hinted().or(Ok(false)));
        let mut theorem_results = Vec::new();
        for id in theorems {
            theorem_results.push(check_theorem(an, id)?);
        }
        Ok(RadicalReport {
            name: an.name.clone(),
            characteristic: an.characteristic(),
            dim: l.dim(),
            labels: l.labels().to_vec(),
            caps: *an.caps(),
            centre: entry(an, Ok(an.centre()), Ok(false))?,
            nilradical: entry(an, an.nil(), nil_h())?,
            solvable_radical: entry(an, an.rad(), rad_h())?,
            rc: entry(an, rc.clone().map(|r| r.of_s), nil_h())?,
            rc_of_l: entry(an, rc.map(|r| r.of_l), nil_h())?,
            phi: phi?,
            e_dagger: entry(an, an.e_dagger(), star_h())?,
            e_hat: entry(an, an.e_hat(), hat_h())?,
            n_dagger: entry(an, an.n_dagger(), star_h())?,
            n_star: entry(an, an.nstar().map(|s| s.value), star_h())?,
            n_hat: entry(an, an.n_hat(), hat_h())?,
            n_tilde: entry(an, an.n_tilde(), tilde_h())?,
            star_series,
            tilde_series,
            star_infty,
            tilde_infty,
            nilradical_class: reg.as_ref().map(|r| r.class),
            radical_derived_length: reg.as_ref().map(|r| r.derived_length),
            nilregular: reg.as_ref().map(|r| r.nilregular),
            solregular: reg.as_ref().map(|r| r.solregular),
            theorem_results,
        })
    }

    fn named(&self) -> Vec<(&'static str, &Entry)> {
        vec![
            ("Z(L)", &self.centre),
            ("N", &self.nilradical),
            ("R", &self.solvable_radical),
            ("R_c(C_L(N))", &self.rc),
            ("R_c(C_L(N)) [Der(L)]", &self.rc_of_l),
            ("φ", &self.phi),
            ("E†", &self.e_dagger),
            ("Ê", &self.e_hat),
            ("N†", &self.n_dagger),
            ("N*", &self.n_star),
            ("N̂", &self.n_hat),
            ("Ñ", &self.n_tilde),
            ("N*_∞", &self.star_infty),
            ("Ñ_∞", &self.tilde_infty),
        ]
    }

    /// Whether some entry could not be computed within the caps.
    pub fn is_partial(&self) -> bool {
        self.named().iter().any(|(_, e)| !e.is_available())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::error::Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let field = if self.characteristic == 0 {
            "Q".to_string()
        } else {
            format!("GF({})", self.characteristic)
        };
        let _ = writeln!(out, "{} over {field}, dim {}", self.name, self.dim);
        let line = |out: &mut String, name: &str, e: &Entry| {
            let body = match (&e.display, e.dim) {
                (Some(d), Some(k)) => format!("{d} (dim {k})"),
                _ => "—".to_string(),
            };
            let _ = write!(out, "  {} = {body}  [{}]", pad(name), e.provenance.tag());
            if let Some(n) = &e.note {
                let _ = write!(out, " {n}");
            }
            out.push('\n');
        };
        for (name, e) in self.named() {
            line(&mut out, name, e);
        }
        for (name, series) in [("N*_n", &self.star_series), ("Ñ_n", &self.tilde_series)] {
            let dims: Vec<String> = series
                .iter()
                .map(|e| e.dim.map_or("?".into(), |d| d.to_string()))
                .collect();
            let _ = writeln!(out, "  {} : dims [{}]", pad(name), dims.join(", "));
        }
        if let (Some(c), Some(d)) = (self.nilradical_class, self.radical_derived_length) {
            let _ = writeln!(
                out,
                "  class(N) = {c}, dl(R) = {d}, nilregular = {}, solregular = {}",
                self.nilregular.unwrap_or(false),
                self.solregular.unwrap_or(false)
            );
        }
        let _ = writeln!(
            out,
            "  caps: enum {}, subspaces {}, spin seeds {}, seed {}",
            self.caps.enum_cap, self.caps.subspace_cap, self.caps.spin_seeds, self.caps.seed
        );
        for r in &self.theorem_results {
            let _ = write!(out, "  {:<14} {}", r.id, r.outcome.label());
            match &r.outcome {
                super::theorems::Outcome::Fail { witness } => {
                    let _ = write!(out, ": {witness}");
                }
                super::theorems::Outcome::NotApplicable { reason }
                | super::theorems::Outcome::CapacitySkipped { reason }
                | super::theorems::Outcome::Unverified { reason } => {
                    let _ = write!(out, " ({reason})");
                }
                super::theorems::Outcome::Pass => {}
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builders::r2;
    use crate::corpus::Hints;
    use crate::exactla::FieldSpec;

    #[test]
    fn r2_report_round_trips() {
        let an = Analysis::new("r2", r2(FieldSpec::gf(3)), Caps::default(), Hints::default());
        let rep = RadicalReport::build(&an, &["t:gennil"]).unwrap();
        assert_eq!(rep.nilradical.display.as_deref(), Some("<e2>"));
        assert_eq!(rep.n_dagger.dim, Some(1));
        assert_eq!(rep.n_tilde.dim, Some(1));
        assert!(!rep.is_partial());
        let back = RadicalReport::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        assert!(rep.render_text().contains("N†"));
    }
}
