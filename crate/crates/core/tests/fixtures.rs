//! The shipped corpus: files on disk match the builders byte for byte, and
//! every frozen expectation matches what the library computes.

use std::path::PathBuf;

use radlie::corpus::builders::bokut7_table;
use radlie::corpus::doc::Expected;
use radlie::corpus::registry::{file_stem, standard};
use radlie::corpus::{load, AlgebraDoc, Fixture};
use radlie::exactla::Subspace;
use radlie::genrad::{Analysis, SeriesKind};
use radlie::{Caps, Result};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn shipped_files_are_bit_exact() {
    for fx in standard() {
        let path = corpus_dir().join(format!("{}.json", file_stem(&fx.name)));
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, fx.to_json(), "{} drifted; rerun `radlie corpus emit corpus`", fx.name);
        let back = load(&path).unwrap();
        assert_eq!(back.algebra, fx.algebra);
        assert_eq!(back.expectations, fx.expectations);
    }
}

#[test]
fn rejected_table_is_shipped_and_rejected() {
    let path = corpus_dir().join("rejected/bokut7-gf7.json");
    let on_disk = std::fs::read_to_string(&path).unwrap();
    assert_eq!(on_disk, AlgebraDoc::from_algebra("bokut7-gf7", &bokut7_table()).to_json());
    assert!(load(&path).is_err());
}

fn computed_subspace(an: &Analysis, key: &str) -> Result<Option<Subspace>> {
    Ok(Some(match key {
        "centre" => an.centre(),
        "nilradical" => an.nil()?,
        "solvable_radical" => an.rad()?,
        "frattini" => an.phi()?,
        "n_star" => an.nstar()?.value,
        "n_dagger" => an.n_dagger()?,
        "n_hat" => an.n_hat()?,
        "e_hat" => an.e_hat()?,
        "n_tilde" => an.n_tilde()?,
        "socle" => an.socle()?.socle,
        "star_infty" => an.series(SeriesKind::Star)?.fixpoint().clone(),
        _ => return Ok(None),
    }))
}

fn computed_scalar(an: &Analysis, key: &str) -> Result<Option<Expected>> {
    let l = an.algebra();
    Ok(Some(match key {
        "dim" => Expected::Integer(l.dim() as u64),
        "nilpotency_class" => Expected::Integer(l.nilpotency_class(&l.full())?.expect("nilpotent") as u64),
        "derived_length" => Expected::Integer(l.derived_length(&l.full())?.expect("solvable") as u64),
        "nilradical_class" => Expected::Integer(an.regularity()?.class as u64),
        "radical_derived_length" => Expected::Integer(an.regularity()?.derived_length as u64),
        "nilregular" => Expected::Bool(an.regularity()?.nilregular),
        "solregular" => Expected::Bool(an.regularity()?.solregular),
        _ => return Ok(None),
    }))
}

fn check(fx: &Fixture) -> Vec<String> {
    let an = Analysis::of_fixture(fx, &Caps::default());
    let mut bad = Vec::new();
    for (key, want) in &fx.expectations {
        match want {
            Expected::Subspace(_) => {
                let want = fx.expected_subspace(key).unwrap().unwrap();
                match computed_subspace(&an, key) {
                    Ok(Some(got)) if got == want => {}
                    Ok(Some(got)) => bad.push(format!(
                        "{} {key}: expected {}, got {}",
                        fx.name,
                        fx.algebra.format_subspace(&want),
                        fx.algebra.format_subspace(&got)
                    )),
                    Ok(None) => bad.push(format!("{} {key}: unknown subspace key", fx.name)),
                    Err(e) => bad.push(format!("{} {key}: {e}", fx.name)),
                }
            }
            _ => match computed_scalar(&an, key) {
                Ok(Some(got)) if &got == want => {}
                Ok(Some(got)) => bad.push(format!("{} {key}: expected {want:?}, got {got:?}", fx.name)),
                Ok(None) => bad.push(format!("{} {key}: unknown scalar key", fx.name)),
                Err(e) => bad.push(format!("{} {key}: {e}", fx.name)),
            },
        }
    }
    bad
}

#[test]
fn expectations_hold() {
    let mut bad = Vec::new();
    let mut checked = 0;
    for fx in standard() {
        checked += fx.expectations.len();
        bad.extend(check(&fx));
    }
    assert!(checked > 50, "only {checked} expectations");
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
