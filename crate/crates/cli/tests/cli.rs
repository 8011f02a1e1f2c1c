use std::process::{Command, Output};

use serde_json::Value;

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("run hecke")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classical_basis_json() {
    let o = hecke(&["basis", "--n", "3", "--d", "2", "--partition", "2,1", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["partition"], serde_json::json!([2, 1]));
    assert_eq!(v["norms"], serde_json::json!(["3/2", "2"]));
    assert_eq!(v["all_units"], Value::Bool(true));
    assert_eq!(v["tableaux"], serde_json::json!([[[1, 2], [3]], [[1, 3], [2]]]));
}

#[test]
fn basis_output_is_deterministic() {
    let args = ["basis", "--n", "4", "--partition", "2,1,1"];
    let a = stdout(&hecke(&args));
    let b = stdout(&hecke(&args));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["basis", "--n", "4", "--d", "3", "--partition", "2,1,1"];
    let one = Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).env("HECKE_THREADS", "1").output().unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).env("HECKE_THREADS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).env("HECKE_THREADS", "many").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn rational_point_basis() {
    let o = hecke(&["basis", "--n", "3", "--partition", "2,1", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vectors"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["basis", "--n", "6", "--partition", "6"],
        vec!["basis", "--n", "3", "--partition", "2,1", "--q", "0"],
        vec!["basis", "--n", "3", "--partition", "2,1", "--q", "-1"],
        vec!["basis", "--n", "3", "--partition", "2,2"],
        vec!["basis", "--n", "3", "--partition", "1,2"],
        vec!["verify", "rotation", "--t", "0.5"],
        vec!["verify", "nosuch"],
        vec!["idempotents", "--n", "6"],
        vec!["df", "--n", "4", "--primes", "4"],
    ] {
        assert_eq!(hecke(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_suites_pass() {
    for suite in [
        "braid", "hecke", "commutant", "qcommute", "lemma34", "orthogonality", "norms", "simplicity", "casimir",
        "rotation", "selfadjoint",
    ] {
        let o = hecke(&["verify", suite, "--n", "3", "--d", "2"]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{suite}: {out}");
        assert!(out.contains(", 0 failed"), "{suite}: {out}");
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn idempotents_json() {
    let o = hecke(&["idempotents", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["central"].as_array().unwrap().len(), 3);
    assert_eq!(v["canonical"].as_array().unwrap().len(), 4);
    assert_eq!(v["frobenius_young"].as_array().unwrap().len(), 4);
    assert_eq!(v["checks_passed"], Value::Bool(true));
}

#[test]
fn df_csv() {
    let o = hecke(&["df", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "prime,i,valuation,leading_coeff\n2,2,2,1\n2,3,0,1\n3,2,0,2\n3,3,2,1\nno_rational_prime_in_S: true\n"
    );
    let o = hecke(&["df", "--n", "3", "--primes", "5"]);
    assert_eq!(stdout(&o), "prime,i,valuation,leading_coeff\n5,2,0,2\n5,3,0,3\nno_rational_prime_in_S: true\n");
}
