use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn depoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn last_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().last().expect("output")).expect("json line")
}

#[test]
fn poly_prints_coefficients() {
    let out = depoly(&["poly", "--named", "paw"]);
    assert!(out.status.success());
    let v = last_json(&out);
    assert_eq!(v["coefficients"], serde_json::json!(["0", "0", "4", "4", "1"]));
    assert_eq!(v["report"]["ultra_lc"]["holds"], true);
}

#[test]
fn poly_csv_has_header_and_row() {
    let out = depoly(&["poly", "--graph6", "C_", "--kind", "independence", "--output", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("graph6,n,kind,coefficients"));
    assert!(lines[1].starts_with("C_,4,independence,1 4 5 2"));
}

#[test]
fn hessian_csv_row() {
    let out = depoly(&["hessian", "--graph6", "C_", "--k", "1", "--output", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(1), Some("C_,1,4,1,0,0,0,0,0,0,0,-48,-4,3"));
}

#[test]
fn campaign_over_file_reports_malformed_lines() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "C~\nnot graph6 at all\nC_").unwrap();
    let path = f.path().to_str().unwrap();
    let out = depoly(&["campaign", "--target", "thm_ulc", "--input", path, "--workers", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let summary = last_json(&out);
    assert_eq!(summary["scanned"], 2);
    assert_eq!(summary["malformed_lines"][0]["line"], 2);
    assert_eq!(summary["verdict"], "consistent");
}

#[test]
fn screening_violations_exit_with_two() {
    let out = depoly(&["campaign", "--target", "conj_2matroid_systems", "--ground", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let summary = last_json(&out);
    assert_eq!(summary["violations"].as_array().unwrap().len(), 25);
}

#[test]
fn counterexample_report() {
    let out = depoly(&["system", "--counterexample"]);
    assert!(out.status.success());
    let v = last_json(&out);
    assert_eq!(v["min_l"], 3);
    assert_eq!(v["report"]["log_concave"]["first_failure"], 2);
}

#[test]
fn bad_input_exits_with_one() {
    assert_eq!(depoly(&["poly", "--graph6", "!!"]).status.code(), Some(1));
    assert_eq!(
        depoly(&["campaign", "--target", "thm_ulc", "--ground", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        depoly(&["campaign", "--target", "nonsense", "--n", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(depoly(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(depoly(&["--help"]).status.code(), Some(0));
}
