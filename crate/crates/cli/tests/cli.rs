use std::path::PathBuf;
use std::process::{Command, Output};

fn greenring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenring"))
        .args(args)
        .output()
        .expect("spawn greenring")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(file)
        .display()
        .to_string()
}

#[test]
fn mul_projective_by_m2() {
    let out = greenring(&["mul", "--radford", "2,2", "M(2,0)", "P[1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2*P[1]\n");
}

#[test]
fn cartan_radford_2_2() {
    let out = greenring(&["cartan", "--radford", "2,2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        doc["matrix"],
        serde_json::json!([[1, 1, 0], [1, 1, 0], [0, 0, 1]])
    );
    assert_eq!(doc["block_form"], true);
}

#[test]
fn oracle_verify_reports_pair_count() {
    let out = greenring(&["oracle-verify", "--radford", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 mismatches / 100 pairs\n");
}

#[test]
fn every_command_succeeds_on_a_datum_file() {
    for cmd in [
        "validate",
        "basis",
        "table",
        "cartan",
        "radical",
        "idempotents",
        "fusion",
        "fpdim",
    ] {
        let out = greenring(&[cmd, "--datum", &data("z2xz6.json")]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{cmd}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn presentations_from_radford_file() {
    for cmd in ["radford-presentation", "g0-presentation"] {
        let out = greenring(&[cmd, "--datum", &data("radford_3_2.json")]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert!(stdout(&out).contains("0 mismatches"), "{cmd}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--radford", "3,2", "--json"];
    assert_eq!(greenring(&args).stdout, greenring(&args).stdout);
}

#[test]
fn json_is_a_single_document() {
    let out = greenring(&["fpdim", "--radford", "2,4", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["fpdim"]["rows"].as_array().unwrap();
    let m2 = rows.iter().find(|r| r["label"] == "M(2,0)").unwrap();
    assert!((m2["eigenvalue"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(greenring(&["basis"]).status.code(), Some(2));
    assert_eq!(
        greenring(&["basis", "--radford", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        greenring(&["basis", "--radford", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        greenring(&["basis", "--datum", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        greenring(&["mul", "--radford", "2,2", "M(9,0)", "P[1]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        greenring(&["radford-presentation", "--datum", &data("z2xz4.json")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(greenring(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_1() {
    // a zero tolerance makes the FPdim comparison fail
    let out = greenring(&["fpdim", "--radford", "2,4", "--tolerance", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
