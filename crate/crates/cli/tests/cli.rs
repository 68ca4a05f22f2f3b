use std::process::{Command, Output};

use serde_json::Value;
use wheelecc_cli::report::Status;
use wheelecc_cli::verify::{sweep, verify, VerifyOptions, CHECK_NAMES, K4_CHECK_NAMES};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wheelecc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn status_of<'a>(report: &'a Value, name: &str) -> &'a str {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("missing check {name}"))["status"]
        .as_str()
        .unwrap()
}

#[test]
fn verify_6_passes_with_inverse() {
    let o = run(&["verify", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["n"], 6);
    assert_eq!(status_of(&r, "inverse_formula"), "pass");
    assert_eq!(status_of(&r, "pinv_formula"), "skip");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn verify_7_runs_singular_checks() {
    let o = run(&["verify", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(status_of(&r, "inverse_formula"), "skip");
    for name in ["pinv_formula", "null_vectors", "rank_ecc_wheel", "laplacian_hat"] {
        assert_eq!(status_of(&r, name), "pass", "{name}");
    }
    assert_eq!(status_of(&r, "rank_certificate"), "skip");
}

#[test]
fn verify_10_runs_rank_certificate() {
    let r = verify(10, VerifyOptions::default()).unwrap();
    let c = r.checks.iter().find(|c| c.name == "rank_certificate").unwrap();
    assert_eq!(c.status, Status::Pass);
}

#[test]
fn verify_4_is_oracle_only() {
    let o = run(&["verify", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    for name in K4_CHECK_NAMES {
        assert_eq!(status_of(&r, name), "pass", "{name}");
    }
    for name in CHECK_NAMES {
        assert_eq!(status_of(&r, name), "skip", "{name}");
    }
}

#[test]
fn every_report_lists_the_full_schema_in_order() {
    for n in 5..=13 {
        let r = verify(n, VerifyOptions::default()).unwrap();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, CHECK_NAMES, "n = {n}");
        for c in &r.checks {
            assert!(c.wall_time_ms.is_none());
            if c.status == Status::Skip {
                assert!(c.note.as_deref().unwrap().starts_with("not applicable"));
            }
        }
    }
}

#[test]
fn gen_e_5_pretty() {
    let o = run(&["gen", "E", "5", "pretty"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "[0  1  1  1  1]\n[1  0  0  2  0]\n[1  0  0  0  2]\n[1  2  0  0  0]\n[1  0  2  0  0]\n"
    );
}

#[test]
fn gen_w_7_json() {
    let o = run(&["gen", "w", "7", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), serde_json::json!(["0/1", "1/6", "1/6", "1/6", "1/6", "1/6", "1/6"]));
    let flag = run(&["gen", "w", "7", "--format", "json"]);
    assert_eq!(flag.stdout, o.stdout);
}

#[test]
fn gen_inverse_7_names_the_precondition() {
    let o = run(&["gen", "inverse", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("invertible only when n mod 3 != 1"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn gen_objects_and_formats() {
    let pinv = json(&run(&["gen", "pinv", "7"]));
    assert_eq!(pinv[0][0], "-1/1");
    assert_eq!(pinv[1][2], "-1/8");
    let lt = json(&run(&["gen", "Ltilde", "6"]));
    assert_eq!(lt[0], serde_json::json!(["5/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3"]));
    let q = run(&["gen", "quotient", "7", "--format", "csv"]);
    assert_eq!(stdout(&q), "0/1,6/1\n1/1,6/1\n");
    let nv = json(&run(&["gen", "nullvecs", "7"]));
    assert_eq!(nv["x"], serde_json::json!(["0/1", "1/1", "0/1", "-1/1", "1/1", "0/1", "-1/1"]));
    let edges = run(&["gen", "wheel_minus_edge", "5", "pretty"]);
    assert_eq!(stdout(&edges), "1 2\n1 3\n1 4\n1 5\n2 3\n3 4\n4 5\n");
    let wheel = json(&run(&["gen", "wheel", "4"]));
    assert_eq!(wheel.as_array().unwrap().len(), 6);
    assert_eq!(run(&["gen", "Lhat", "8"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "E_minus_edge", "4"]).status.code(), Some(2));
}

#[test]
fn sweep_7_7_equals_verify_7() {
    let s = json(&run(&["sweep", "7", "7"]));
    let v = json(&run(&["verify", "7"]));
    assert_eq!(s["reports"][0], v);
    assert_eq!(s["summary"]["reports"], 1);
}

#[test]
fn sweep_5_20_has_no_failures() {
    let o = run(&["sweep", "5", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let s = json(&o);
    assert_eq!(s["reports"].as_array().unwrap().len(), 16);
    assert_eq!(s["summary"]["failed"], 0);
    assert_eq!(s["summary"]["first_failure"], Value::Null);
}

#[test]
fn sweep_is_independent_of_jobs() {
    let one = run(&["sweep", "5", "16", "--jobs", "1"]);
    let four = run(&["sweep", "5", "16", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
    let csv1 = run(&["sweep", "5", "16", "--jobs", "1", "--format", "csv"]);
    let csv3 = run(&["sweep", "5", "16", "--jobs", "3", "--format", "csv"]);
    assert_eq!(csv1.stdout, csv3.stdout);
    let lib = sweep(5, 9, 2, VerifyOptions::default()).unwrap();
    let ns: Vec<usize> = lib.reports.iter().map(|r| r.n).collect();
    assert_eq!(ns, vec![5, 6, 7, 8, 9]);
}

#[test]
fn csv_is_one_row_per_check() {
    let text = stdout(&run(&["verify", "8", "--format", "csv"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,check,status,expected,actual,note"));
    assert_eq!(lines.count(), CHECK_NAMES.len());
    let timed = stdout(&run(&["verify", "8", "--format", "csv", "--timings"]));
    assert!(timed.starts_with("n,check,status,expected,actual,note,wall_time_ms\n"));
}

#[test]
fn output_is_reproducible() {
    let a = run(&["verify", "9", "--format", "pretty"]);
    let b = run(&["verify", "9", "--format", "pretty"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("passed, 0 failed, 5 skipped\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["sweep", "10", "5"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "3", "5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "3"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "F", "5"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let big = run(&["sweep", "5", "201"]);
    assert_eq!(big.status.code(), Some(2));
    assert!(String::from_utf8(big.stderr).unwrap().contains("--max-n-override"));
}

#[test]
fn tight_tolerance_reports_failure_with_exit_1() {
    let o = run(&["verify", "5", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(status_of(&json(&o), "spectral_radius"), "fail");
}
