//! The on-disk algebra document (`radlie-algebra/1`).
//!
//! Canonical form: brackets sorted by `(i, j)`, terms by `k`, coefficients as
//! reduced decimal strings (`"a"` or `"a/b"` over ℚ, residues in `[0, p)` over
//! GF(p)), pretty-printed with a trailing newline.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::matrix::zero_vector;
use crate::exactla::{FieldSpec, Subspace, Vector};
use crate::liecore::LieAlgebra;

pub const SCHEMA: &str = "radlie-algebra/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    pub characteristic: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermDoc>,
}

/// A subspace as a list of coefficient vectors over the document basis.
pub type SubspaceDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Bool(bool),
    Integer(u64),
    Subspace(SubspaceDoc),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HintsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical: Option<SubspaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable_radical: Option<SubspaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_ideals: Option<Vec<SubspaceDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frattini: Option<SubspaceDoc>,
}

impl HintsDoc {
    fn is_empty(&self) -> bool {
        *self == HintsDoc::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub schema: String,
    pub name: String,
    pub field: FieldDoc,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expectations: BTreeMap<String, Expected>,
    #[serde(default, skip_serializing_if = "HintsDoc::is_empty")]
    pub hints: HintsDoc,
}

/// Decoded hints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hints {
    pub nilradical: Option<Subspace>,
    pub solvable_radical: Option<Subspace>,
    pub minimal_ideals: Option<Vec<Subspace>>,
    pub frattini: Option<Subspace>,
}

impl Hints {
    pub fn is_empty(&self) -> bool {
        *self == Hints::default()
    }
}

/// An algebra with its expectations and hints.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub algebra: LieAlgebra,
    pub expectations: BTreeMap<String, Expected>,
    pub hints: Hints,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn parse_vector(field: FieldSpec, n: usize, raw: &[String], at: &str) -> Result<Vector> {
    if raw.len() != n {
        return Err(parse_err(at, format!("expected {n} coefficients, found {}", raw.len())));
    }
    raw.iter()
        .enumerate()
        .map(|(k, s)| {
            field
                .parse(s)
                .map_err(|e| parse_err(format!("{at}[{k}]"), e.to_string()))
        })
        .collect()
}

fn parse_subspace(field: FieldSpec, n: usize, raw: &SubspaceDoc, at: &str) -> Result<Subspace> {
    let vs = raw
        .iter()
        .enumerate()
        .map(|(r, v)| parse_vector(field, n, v, &format!("{at}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(field, n, vs)
}

pub fn encode_subspace(s: &Subspace) -> SubspaceDoc {
    s.basis()
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect()
}

impl AlgebraDoc {
    pub fn from_algebra(name: &str, l: &LieAlgebra) -> Self {
        let brackets = l
            .table()
            .iter()
            .map(|(&(i, j), v)| BracketDoc {
                i,
                j,
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| TermDoc {
                        k,
                        coeff: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        AlgebraDoc {
            schema: SCHEMA.into(),
            name: name.into(),
            field: FieldDoc {
                characteristic: l.field().characteristic() as u64,
            },
            dim: l.dim(),
            basis: l.labels().to_vec(),
            brackets,
            expectations: BTreeMap::new(),
            hints: HintsDoc::default(),
        }
    }

    pub fn from_fixture(f: &Fixture) -> Self {
        let mut doc = Self::from_algebra(&f.name, &f.algebra);
        doc.expectations = f.expectations.clone();
        doc.hints = HintsDoc {
            nilradical: f.hints.nilradical.as_ref().map(encode_subspace),
            solvable_radical: f.hints.solvable_radical.as_ref().map(encode_subspace),
            minimal_ideals: f
                .hints
                .minimal_ideals
                .as_ref()
                .map(|v| v.iter().map(encode_subspace).collect()),
            frattini: f.hints.frattini.as_ref().map(encode_subspace),
        };
        doc
    }

    /// The structure-constant table without running `validate`.
    pub fn unchecked_algebra(&self) -> Result<LieAlgebra> {
        if self.schema != SCHEMA {
            return Err(parse_err("schema", format!("unsupported schema `{}`", self.schema)));
        }
        let field = FieldSpec::new(self.field.characteristic)?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(parse_err(
                "basis",
                format!("{} labels for dimension {n}", self.basis.len()),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (b, br) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{b}]");
            if br.i >= br.j || br.j >= n {
                return Err(parse_err(
                    at,
                    format!("indices ({}, {}) must satisfy i < j < {n}", br.i, br.j),
                ));
            }
            if !seen.insert((br.i, br.j)) {
                return Err(parse_err(at, format!("duplicate bracket ({}, {})", br.i, br.j)));
            }
            let mut v = zero_vector(field, n);
            for (t, term) in br.terms.iter().enumerate() {
                let at = format!("brackets[{b}].terms[{t}]");
                if term.k >= n {
                    return Err(parse_err(at, format!("index {} out of range", term.k)));
                }
                let c = field
                    .parse(&term.coeff)
                    .map_err(|e| parse_err(format!("{at}.coeff"), e.to_string()))?;
                v[term.k] = &v[term.k] + &c;
            }
            brackets.push((br.i, br.j, v));
        }
        LieAlgebra::new(field, self.basis.clone(), brackets)
    }

    pub fn to_fixture(&self) -> Result<Fixture> {
        let algebra = self.unchecked_algebra()?.validated()?;
        let field = algebra.field();
        let n = algebra.dim();
        for (key, value) in &self.expectations {
            if let Expected::Subspace(raw) = value {
                parse_subspace(field, n, raw, &format!("expectations.{key}"))?;
            }
        }
        let sub = |raw: &Option<SubspaceDoc>, key: &str| {
            raw.as_ref()
                .map(|r| parse_subspace(field, n, r, &format!("hints.{key}")))
                .transpose()
        };
        let hints = Hints {
            nilradical: sub(&self.hints.nilradical, "nilradical")?,
            solvable_radical: sub(&self.hints.solvable_radical, "solvable_radical")?,
            minimal_ideals: self
                .hints
                .minimal_ideals
                .as_ref()
                .map(|list| {
                    list.iter()
                        .enumerate()
                        .map(|(m, r)| parse_subspace(field, n, r, &format!("hints.minimal_ideals[{m}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?,
            frattini: sub(&self.hints.frattini, "frattini")?,
        };
        Ok(Fixture {
            name: self.name.clone(),
            algebra,
            expectations: self.expectations.clone(),
            hints,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string())
        })
    }

    /// Canonical text: pretty JSON plus a newline.
    pub fn to_json(&self) -> String {
        let mut doc = self.clone();
        doc.brackets.sort_by_key(|b| (b.i, b.j));
        for b in &mut doc.brackets {
            b.terms.sort_by_key(|t| t.k);
        }
        let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
        s.push('\n');
        s
    }
}

impl Fixture {
    pub fn new(name: &str, algebra: LieAlgebra) -> Self {
        Fixture {
            name: name.into(),
            algebra,
            expectations: BTreeMap::new(),
            hints: Hints::default(),
        }
    }

    pub fn expect(mut self, key: &str, value: Expected) -> Self {
        self.expectations.insert(key.into(), value);
        self
    }

    pub fn expect_subspace(self, key: &str, s: &Subspace) -> Self {
        self.expect(key, Expected::Subspace(encode_subspace(s)))
    }

    pub fn expect_int(self, key: &str, v: u64) -> Self {
        self.expect(key, Expected::Integer(v))
    }

    pub fn expect_bool(self, key: &str, v: bool) -> Self {
        self.expect(key, Expected::Bool(v))
    }

    /// Decoded subspace expectation, if present.
    pub fn expected_subspace(&self, key: &str) -> Result<Option<Subspace>> {
        match self.expectations.get(key) {
            Some(Expected::Subspace(raw)) => Ok(Some(parse_subspace(
                self.algebra.field(),
                self.algebra.dim(),
                raw,
                &format!("expectations.{key}"),
            )?)),
            Some(other) => Err(parse_err(
                format!("expectations.{key}"),
                format!("expected a subspace, found {other:?}"),
            )),
            None => Ok(None),
        }
    }

    pub fn to_json(&self) -> String {
        AlgebraDoc::from_fixture(self).to_json()
    }
}

/// Reads and validates a document.
pub fn load(path: &Path) -> Result<Fixture> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    AlgebraDoc::from_json(&text)?.to_fixture()
}

pub fn save(path: &Path, fixture: &Fixture) -> Result<()> {
    std::fs::write(path, fixture.to_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builders;

    #[test]
    fn r2_roundtrip_is_bit_exact() {
        let f = Fixture::new("r2", builders::r2(FieldSpec::gf(3)));
        let text = f.to_json();
        let back = AlgebraDoc::from_json(&text).unwrap().to_fixture().unwrap();
        assert_eq!(back.algebra, f.algebra);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn rational_coefficients_roundtrip() {
        let f = FieldSpec::RATIONALS;
        let half = f.parse("-1/2").unwrap();
        let mut v = zero_vector(f, 2);
        v[1] = half;
        let l = LieAlgebra::new(f, vec!["a".into(), "b".into()], [(0, 1, v)]).unwrap();
        let text = Fixture::new("half", l.clone()).to_json();
        assert!(text.contains("\"-1/2\""));
        assert_eq!(AlgebraDoc::from_json(&text).unwrap().to_fixture().unwrap().algebra, l);
    }

    #[test]
    fn characteristic_four_is_rejected() {
        let mut doc = AlgebraDoc::from_algebra("x", &builders::r2(FieldSpec::gf(3)));
        doc.field.characteristic = 4;
        assert!(matches!(doc.to_fixture(), Err(Error::Input(_))));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 is not a Lie algebra
        let text = r#"{"schema":"radlie-algebra/1","name":"bad","field":{"characteristic":0},
            "dim":3,"basis":["e1","e2","e3"],"brackets":[
            {"i":0,"j":1,"terms":[{"k":2,"coeff":"1"}]},
            {"i":0,"j":2,"terms":[{"k":0,"coeff":"1"}]},
            {"i":1,"j":2,"terms":[{"k":0,"coeff":"1"}]}]}"#;
        match AlgebraDoc::from_json(text).unwrap().to_fixture() {
            Err(Error::Jacobi { triple, .. }) => assert_eq!(triple, (1, 2, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_locations() {
        let e = AlgebraDoc::from_json("{\"schema\": 3}").unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location.starts_with("line 1")));
        let mut doc = AlgebraDoc::from_algebra("x", &builders::r2(FieldSpec::gf(3)));
        doc.brackets[0].terms[0].coeff = "one".into();
        match doc.to_fixture() {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "brackets[0].terms[0].coeff"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
