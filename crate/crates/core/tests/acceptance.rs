//! Acceptance criteria, one test each. Every test writes a single
//! `criterion N: PASS|FAIL — ...` line straight to stderr so the lines show
//! up in the test log even when output is captured.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radlie::corpus::builders::{bokut7, filiform, nil7, r2, sl2, trunc_tensor};
use radlie::corpus::registry::{by_name, pasha_ideals, suite};
use radlie::exactla::{FieldSpec, Matrix, Subspace};
use radlie::genrad::{is_quasi_simple, run_suite, Analysis, Outcome, SeriesKind};
use radlie::liecore::LieAlgebra;
use radlie::oracle::{compare, Target};
use radlie::radicals::{nilradical, solvable_radical, RegularityVerdict};
use radlie::{Caps, Result};

fn line(n: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n}: {verdict} — {detail}");
}

fn verdict(n: u32, ok: bool, detail: String) {
    line(n, ok, &detail);
    assert!(ok, "criterion {n}: {detail}");
}

fn class_dl(l: &LieAlgebra) -> Result<(usize, usize, RegularityVerdict)> {
    let caps = Caps::default();
    let n = nilradical(l, &caps)?;
    let r = solvable_radical(l, &caps)?;
    let c = l.nilpotency_class(&n)?.expect("nilradical is nilpotent");
    let d = l.derived_length(&r)?.expect("radical is solvable");
    Ok((c, d, RegularityVerdict::from_numbers(l.field().characteristic(), c, d)))
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

#[test]
fn criterion_1_seven_dimensional_example() {
    let t = Instant::now();
    match bokut7() {
        Ok(l) => {
            let (c, d, reg) = class_dl(&l).unwrap();
            let el = t.elapsed();
            let ok = c == 5 && d == 3 && reg.nilregular && !reg.solregular && el < Duration::from_secs(1);
            verdict(1, ok, format!("class {c}, dl {d}, nilregular {}, solregular {}, {}", reg.nilregular, reg.solregular, secs(el)));
        }
        Err(e) => {
            // The table as printed is not a Lie algebra; report the
            // substitute with the same invariants alongside the failure.
            let (c, d, reg) = class_dl(&nil7()).unwrap();
            verdict(
                1,
                false,
                format!(
                    "literal table rejected ({e}); substitute nil7 over GF(7): class {c}, dl {d}, nilregular {}, solregular {}",
                    reg.nilregular, reg.solregular
                ),
            );
        }
    }
}

#[test]
fn criterion_2_r2_over_gf3() {
    let t = Instant::now();
    let l = r2(FieldSpec::gf(3));
    let caps = Caps::default();
    let n = nilradical(&l, &caps).unwrap();
    let r = solvable_radical(&l, &caps).unwrap();
    let (_, _, reg) = class_dl(&l).unwrap();
    let e2 = Subspace::coordinate(l.field(), 2, [1]);
    let el = t.elapsed();
    let ok = n == e2 && r.is_full() && reg.nilregular && !reg.solregular && el < Duration::from_secs(1);
    verdict(
        2,
        ok,
        format!(
            "N = {}, R = {}, nilregular {}, solregular {}, {}",
            l.format_subspace(&n),
            l.format_subspace(&r),
            reg.nilregular,
            reg.solregular,
            secs(el)
        ),
    );
}

#[test]
fn criterion_3_filiform_family() {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 5..=8 {
        let t = Instant::now();
        let l = filiform(FieldSpec::gf(5), n).unwrap();
        let (c, d, reg) = class_dl(&l).unwrap();
        let el = t.elapsed();
        ok &= c == n - 1 && d == 2 && reg.nilregular == (n - 1 < 4) && reg.solregular && el < Duration::from_secs(1);
        parts.push(format!("n={n}: class {c}, dl {d}, nilreg {}, solreg {} ({})", reg.nilregular, reg.solregular, secs(el)));
    }
    verdict(3, ok, parts.join("; "));
}

#[test]
fn criterion_4_truncated_current_algebras() {
    let t = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [5u32, 7] {
        let l = trunc_tensor(&sl2(FieldSpec::gf(p)), 1, p).unwrap();
        let (c, d, _) = class_dl(&l).unwrap();
        ok &= c == p as usize - 1 && d == 3;
        parts.push(format!("p={p}: class(N) {c}, dl(R) {d}"));
    }
    let el = t.elapsed();
    ok &= el < Duration::from_secs(5);
    parts.push(secs(el));
    verdict(4, ok, parts.join("; "));
}

#[test]
fn criterion_5_theorem_suite() {
    let t = Instant::now();
    let fixtures = suite().unwrap();
    let sums = fixtures.iter().filter(|f| f.name.contains('+')).count();
    let quotients = fixtures.iter().filter(|f| f.name.contains('/')).count();
    let res = run_suite(&fixtures, &[], &Caps::default()).unwrap();
    let el = t.elapsed();
    let mut problems: Vec<String> = res
        .failures()
        .map(|r| format!("{} {}: {:?}", r.algebra, r.id, r.outcome))
        .collect();
    // statements that must actually run (not merely avoid failing)
    for r in &res.results {
        let must_pass = match r.id.as_str() {
            "t:gennil" | "t:centgnil" | "t:rad" | "t:centhat" | "p:equal" | "p:hdouble" | "t:cent" | "c:der" => {
                true
            }
            "t:phi" => {
                let fx = fixtures.iter().find(|f| f.name == r.algebra).expect("fixture");
                matches!(fx.algebra.field().characteristic(), 2 | 3) && fx.algebra.dim() <= 5
            }
            _ => false,
        };
        if must_pass && r.outcome != Outcome::Pass && !matches!(r.outcome, Outcome::CapacitySkipped { .. } if r.id != "t:phi") {
            problems.push(format!("{} {}: {:?}", r.algebra, r.id, r.outcome));
        }
    }
    let s = &res.summary;
    let ok = fixtures.len() >= 15 && sums > 0 && quotients > 0 && problems.is_empty() && el < Duration::from_secs(120);
    verdict(
        5,
        ok,
        format!(
            "{} algebras ({sums} sums, {quotients} quotients): {} pass, {} fail, {} n/a, {} capacity-skipped, {}{}",
            fixtures.len(),
            s.pass,
            s.fail,
            s.not_applicable,
            s.capacity_skipped,
            secs(el),
            if problems.is_empty() { String::new() } else { format!("; {}", problems.join("; ")) }
        ),
    );
}

#[test]
fn criterion_6_quasi_minimal_not_quasi_simple() {
    let t = Instant::now();
    let fx = by_name("pasha-7-1").unwrap();
    let caps = Caps::default();
    let an = Analysis::of_fixture(&fx, &caps);
    let l = an.algebra();
    let (a, a_plus) = pasha_ideals(l);
    let qm = an.component_is_quasi_minimal(&a).unwrap();
    let qs = is_quasi_simple(l, &a, &caps).unwrap();
    let mcomp = an.mcomp().unwrap().components;
    let nd = an.n_dagger().unwrap();
    let series = an.series(SeriesKind::Star).unwrap();
    let inner = {
        let sa = an.restriction(&nd).unwrap();
        sa.restriction.pull(&sa.analysis.n_dagger().unwrap())
    };
    let e_hat = an.e_hat().unwrap();
    let n_hat = an.n_hat().unwrap();
    let c_hat = l.centraliser(&n_hat).unwrap();
    let el = t.elapsed();
    let ok = qm
        && !qs
        && mcomp == vec![a.clone()]
        && nd == a
        && series.terms == vec![l.full(), a.clone(), a_plus.clone(), a_plus.clone()]
        && inner == a_plus
        && e_hat.is_zero()
        && n_hat.is_zero()
        && c_hat.is_full()
        && el < Duration::from_secs(30);
    let dims: Vec<usize> = series.terms.iter().map(Subspace::dim).collect();
    verdict(
        6,
        ok,
        format!(
            "quasi-minimal {qm}, quasi-simple {qs}, |MComp| {} (= A: {}), N† = A: {}, star dims {dims:?}, N†(N†) = A⁺: {}, Ê = 0: {}, N̂ = 0: {}, C_L(N̂) = L: {}, {}",
            mcomp.len(),
            mcomp.first() == Some(&a),
            nd == a,
            inner == a_plus,
            e_hat.is_zero(),
            n_hat.is_zero(),
            c_hat.is_full(),
            secs(el)
        ),
    );
}

#[test]
fn criterion_7_oracle_equivalence() {
    let t = Instant::now();
    let caps = Caps::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    for fx in suite().unwrap() {
        let l = &fx.algebra;
        if !matches!(l.field().characteristic(), 2 | 3) || l.dim() > 4 {
            continue;
        }
        checked += 1;
        for c in compare(l, &Target::ALL, &caps).unwrap() {
            if !c.agree {
                bad.push(format!("{} {}: oracle {} vs {}", fx.name, c.target.name(), c.oracle, c.main));
            }
        }
    }
    let el = t.elapsed();
    let ok = checked > 0 && bad.is_empty() && el < Duration::from_secs(60);
    verdict(
        7,
        ok,
        format!("{checked} algebras × {} targets, {} disagreements, {}{}", Target::ALL.len(), bad.len(), secs(el),
            if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }),
    );
}

fn random_matrix(f: FieldSpec, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let rows = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    // sparse-ish entries make rank deficiency common
                    if rng.gen_bool(0.4) {
                        f.zero()
                    } else {
                        f.from_i64(rng.gen_range(-3..=3))
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(f, cols, rows).unwrap()
}

/// One randomized rref / Grassmann / canonicity check; `None` if it holds.
fn linalg_check(f: FieldSpec, rng: &mut ChaCha8Rng) -> Option<String> {
    let n = rng.gen_range(1..=6);
    let (ra, rb) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let a = random_matrix(f, rng, ra, n);
    let b = random_matrix(f, rng, rb, n);
    let (r, piv) = a.rref();
    if r.rref() != (r.clone(), piv.clone()) {
        return Some("rref is not idempotent".into());
    }
    if a.rank() + a.nullity() != n || a.rank() != piv.len() {
        return Some("rank + nullity ≠ columns".into());
    }
    let u = Subspace::span(f, n, a.to_rows()).unwrap();
    let w = Subspace::span(f, n, b.to_rows()).unwrap();
    if u.sum(&w).dim() + u.intersect(&w).dim() != u.dim() + w.dim() {
        return Some("Grassmann identity fails".into());
    }
    // canonicity: a random invertible recombination of the rows spans the same canonical subspace
    let k = a.nrows();
    let mut mix = random_matrix(f, rng, k, k);
    for i in 0..k {
        mix.set(i, i, f.one());
        for j in 0..i {
            mix.set(i, j, f.zero());
        }
    }
    let mixed = mix.mul(&a).unwrap();
    let u2 = Subspace::span(f, n, mixed.to_rows()).unwrap();
    if u2 != u || u2.basis() != u.basis() {
        return Some("canonical basis depends on the spanning set".into());
    }
    None
}

#[test]
fn criterion_8_linear_algebra_properties() {
    let t = Instant::now();
    let mut violations = Vec::new();
    let fields = [FieldSpec::RATIONALS, FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(5), FieldSpec::gf(7)];
    for (s, f) in fields.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + s as u64);
        for i in 0..1000 {
            if let Some(v) = linalg_check(f, &mut rng) {
                violations.push(format!("{f} #{i}: {v}"));
            }
        }
    }
    let el = t.elapsed();
    let ok = violations.is_empty() && el < Duration::from_secs(10);
    verdict(8, ok, format!("{} fields × 1000 checks, {} violations, {}", fields.len(), violations.len(), secs(el)));
}

#[test]
fn criterion_9_strict_inclusion_unverified() {
    let fixtures = suite().unwrap();
    let res = run_suite(&fixtures, &["p:equal".to_string()], &Caps::default()).unwrap();
    let not_passed: Vec<String> = res
        .results
        .iter()
        .filter(|r| r.outcome != Outcome::Pass)
        .map(|r| format!("{}: {}", r.algebra, r.outcome.label()))
        .collect();
    let ok = not_passed.is_empty() && res.unverified.len() == 1 && res.summary.unverified == 1;
    verdict(
        9,
        ok,
        format!(
            "N* ⊆ Ñ on {}/{} algebras; recorded: {}{}",
            res.summary.pass,
            res.results.len(),
            res.unverified.first().map(String::as_str).unwrap_or("nothing"),
            if not_passed.is_empty() { String::new() } else { format!("; not passed: {}", not_passed.join(", ")) }
        ),
    );
}
