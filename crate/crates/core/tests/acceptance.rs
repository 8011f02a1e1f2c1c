//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use serde_json::{json, Value};

use hecke_core::canonbasis::{self, build_basis, checks as bchecks, Partition};
use hecke_core::dfreport;
use hecke_core::idempotents::{self, canonical_idempotent, central_idempotent, frobenius_young_idempotent};
use hecke_core::qarith::{is_unit_z_nfact, rational};
use hecke_core::symgroup::GroupAlgebraElement;
use hecke_core::tensorrep::{checks as tchecks, rbar_apply, rotation_check};
use hecke_core::tensorspace::{TensorVector, Word};
use hecke_core::{Param, Rational, Report, Result, RingElem};

const ROTATION_TOLERANCE: f64 = 1e-9;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: Vec<String> =
        reports.iter().flat_map(|r| r.failures().map(|c| format!("{}: {}", r.title, c.label))).collect();
    if failed.is_empty() {
        Outcome { passed: true, detail: format!("{total} checks") }
    } else {
        Outcome { passed: false, detail: failed.join("; ") }
    }
}

fn word(letters: &[u8], d: usize) -> Word {
    Word::new(letters.to_vec(), d).unwrap()
}

fn vector<C: hecke_core::Scalar>(n: usize, d: usize, terms: &[(&[u8], C)]) -> TensorVector<C> {
    TensorVector::from_terms(n, d, terms.iter().map(|(w, c)| (word(w, d), c.clone()))).unwrap()
}

fn c1_braid_hecke() -> Result<Outcome> {
    let mut reports = Vec::new();
    for n in 2..=4 {
        for d in 1..=3 {
            reports.push(tchecks::braid_relations(n, d)?);
            reports.push(tchecks::hecke_relation(n, d)?);
        }
    }
    Ok(from_reports(reports))
}

fn c2_rbar_table() -> Result<Outcome> {
    let param = Param::symbolic();
    let q = RingElem::q();
    let one = RingElem::one();
    let q_minus = &q - &RingElem::q_pow(-1);
    let cases: [(&[u8], Vec<(&[u8], RingElem)>); 4] = [
        (&[1, 1], vec![(&[1, 1], q.clone())]),
        (&[1, 2], vec![(&[1, 2], q_minus), (&[2, 1], one.clone())]),
        (&[2, 1], vec![(&[1, 2], one)]),
        (&[2, 2], vec![(&[2, 2], q)]),
    ];
    let mut report = Report::new("R-bar on V^2, d = 2");
    for (input, expected) in cases {
        let got = rbar_apply(&param, 1, &vector(2, 2, &[(input, RingElem::one())]))?;
        report.push(format!("R-bar {input:?}"), got == vector(2, 2, &expected));
    }
    Ok(from_reports(vec![report]))
}

fn c3_commutant() -> Result<Outcome> {
    let mut reports = Vec::new();
    for n in 2..=4 {
        for d in 2..=3 {
            reports.push(tchecks::commutant(n, d)?);
            reports.push(tchecks::q_commutation(n, d)?);
        }
    }
    Ok(from_reports(reports))
}

fn c4_lowering() -> Result<Outcome> {
    Ok(from_reports((1..=4).map(bchecks::lowering_suite).collect::<Result<_>>()?))
}

fn c5_classical_two_one() -> Result<Outcome> {
    let half = rational(1, 2);
    let v1 = vector(3, 2, &[(&[2, 1, 1], rational(1, 1)), (&[1, 2, 1], -half.clone()), (&[1, 1, 2], -half)]);
    let v2 = vector(3, 2, &[(&[1, 2, 1], rational(1, 1)), (&[1, 1, 2], rational(-1, 1))]);
    let basis = build_basis(&Param::classical(), &Partition::new(vec![2, 1])?)?;
    let got: Vec<TensorVector<Rational>> = basis.vectors().cloned().collect();
    let mut report = Report::new("classical (2,1)");
    let matches = |a: &TensorVector<Rational>, b: &TensorVector<Rational>| a == b || *a == b.scale(&rational(-1, 1));
    report.push("two basis vectors", got.len() == 2);
    report.push("vectors equal v1, v2 up to sign", got.len() == 2 && matches(&got[0], &v1) && matches(&got[1], &v2));
    let mut norms = basis.norms()?;
    norms.sort();
    report.push_detail("norms {3/2, 2}", norms == vec![rational(3, 2), rational(2, 1)], format!("{norms:?}"));
    report.push("norms are units of Z[1/3!]", norms.iter().all(|c| is_unit_z_nfact(c, 3)));
    Ok(from_reports(vec![report]))
}

fn c6_dimensions() -> Result<Outcome> {
    let q0 = rational(2, 1);
    let reports = (1..=5).map(|n| bchecks::basis_suite(&Param::symbolic(), n, n, &q0)).collect::<Result<_>>()?;
    Ok(from_reports(reports))
}

fn c7_orthogonality_and_units() -> Result<Outcome> {
    let q0 = rational(2, 1);
    let mut reports = Vec::new();
    for n in 1..=4 {
        reports.push(bchecks::basis_suite(&Param::symbolic(), n, n, &q0)?);
    }
    for p in bchecks::sample_points() {
        reports.push(bchecks::basis_suite(&Param::at(p)?, 5, 5, &q0)?);
    }
    for n in 1..=5 {
        reports.push(bchecks::norms_suite(n, n)?);
    }
    Ok(from_reports(reports))
}

fn c8_full_algebra() -> Result<Outcome> {
    let q0 = rational(2, 1);
    let mut report = Report::new("End(V(p;0)) at q0 = 2");
    for n in 1..=4 {
        for p in Partition::all(n, n) {
            report.push(format!("{p} spans the full matrix ring"), canonbasis::spans_full_algebra(&p, &q0)?);
        }
        let (rank, expected) = canonbasis::joint_rank(n, n, &q0)?;
        report.push_detail(format!("n={n} joint rank"), rank == expected, format!("{rank} of {expected}"));
    }
    Ok(from_reports(vec![report]))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/idempotents_n3_{name}.json", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap_or_default()
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn c9_idempotents() -> Result<Outcome> {
    let table = idempotents::rep_table(3)?;
    let mut central = Vec::new();
    let mut canonical = Vec::new();
    let mut fy = Vec::new();
    let mut canonical_elems = Vec::new();
    let mut fy_elems = Vec::new();
    for (k, p) in table.partitions().iter().enumerate() {
        central.push(json!({ "partition": p.parts(), "element": central_idempotent(&table, p)?.to_json() }));
        let mut canon_sum = GroupAlgebraElement::zero(3);
        let mut fy_sum = GroupAlgebraElement::zero(3);
        for t in table.tableaux(k) {
            let c = canonical_idempotent(&table, t)?;
            let f = frobenius_young_idempotent(t)?;
            canonical.push(json!({ "tableau": t.to_json(), "element": c.to_json() }));
            fy.push(json!({ "tableau": t.to_json(), "element": f.to_json() }));
            canon_sum = canon_sum.add(&c)?;
            fy_sum = fy_sum.add(&f)?;
            canonical_elems.push(c);
            fy_elems.push(f);
        }
        canonical_elems.push(canon_sum);
        fy_elems.push(fy_sum);
    }
    let mut report = Report::new("idempotents n=3");
    report.push("central golden", pretty(&Value::Array(central)) == golden("central"));
    report.push("canonical golden", pretty(&Value::Array(canonical)) == golden("canonical"));
    report.push("Frobenius-Young golden", pretty(&Value::Array(fy)) == golden("frobenius_young"));
    // Layout per shape: tableaux then the shape sum; (3) has 1, (2,1) has 2, (1,1,1) has 1.
    report.push("canonical differs from Frobenius-Young for (2,1)", canonical_elems[2] != fy_elems[2]);
    report.push("shape sums agree", [1, 4, 6].iter().all(|&i| canonical_elems[i] == fy_elems[i]));
    let table4 = idempotents::rep_table(4)?;
    Ok(from_reports(vec![report, idempotents::invariants(&table4)?]))
}

fn c10_casimir() -> Result<Outcome> {
    let mut reports = Vec::new();
    for n in 1..=4 {
        reports.push(tchecks::classical_casimir_spectrum(n)?);
    }
    reports.push(tchecks::quantized_casimir(3)?);
    for n in 1..=3 {
        reports.push(tchecks::casimir_limit(n)?);
    }
    Ok(from_reports(reports))
}

fn c11_rotation() -> Result<Outcome> {
    let mut report = Report::new("rotation");
    for t in [0.1, 0.25] {
        let r = rotation_check(t)?;
        report.push_detail(format!("t = {t}"), r <= ROTATION_TOLERANCE, format!("residual {r:.3e}"));
    }
    let detail = report.checks.iter().filter_map(|c| c.detail.clone()).collect::<Vec<_>>().join(", ");
    Ok(Outcome { passed: report.passed(), detail })
}

fn c12_df() -> Result<Outcome> {
    let mut report = Report::new("Donald-Flanigan");
    for n in 2..=7 {
        let rep = dfreport::report(n, None)?;
        report.push(format!("n={n} finite valuations mod every p <= n"), rep.no_rational_prime_in_s());
    }
    for (i, p, val) in [(2, 2, 2), (3, 3, 2), (2, 3, 0)] {
        let row = dfreport::valuation_row(i, p)?;
        report.push_detail(format!("val at (i,p)=({i},{p})"), row.valuation == val, row.valuation.to_string());
    }
    for n in 2..=4 {
        report.push(format!("n={n} deformation fiber"), dfreport::deformation_fiber_check(n)?);
        report.push(format!("n={n} faithfulness"), dfreport::faithfulness_check(n, &rational(2, 1), 20, 7)?);
    }
    Ok(from_reports(vec![report]))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 12] = [
        ("braid and Hecke relations, n <= 4, d <= 3", c1_braid_hecke),
        ("R-bar action table on V^2", c2_rbar_table),
        ("commutant and q-commutation, n <= 4, d <= 3", c3_commutant),
        ("lowering ladder and annihilation, n <= 4", c4_lowering),
        ("classical (2,1) basis and norms", c5_classical_two_one),
        ("basis size = nullspace dimension = tableau count, n <= 5", c6_dimensions),
        ("orthogonality and unit norms, n <= 5", c7_orthogonality_and_units),
        ("full matrix algebras and joint rank, n <= 4", c8_full_algebra),
        ("idempotents: n = 3 golden files, n = 4 invariants", c9_idempotents),
        ("Casimir spectrum, centrality and limit", c10_casimir),
        ("rotation identity residual <= 1e-9", c11_rotation),
        ("valuation report and deformation checks", c12_df),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{status} {:>2}. {name} [{}; {:.2?}]", k + 1, outcome.detail, start.elapsed());
        failures += usize::from(!outcome.passed);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
