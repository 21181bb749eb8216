use std::fs;
use std::process::{Command, Output};

use ag_core::io::AlgebraFile;
use ag_core::AlgebraTable;

fn agtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agtool"))
        .args(args)
        .output()
        .expect("agtool runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn build_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = agtool(&["build", "--type", "G2", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let one = agtool(&["build", "--type", "A2", "--threads", "1"]);
    let many = agtool(&["build", "--type", "A2", "--threads", "4"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn exported_table_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("b2.json");
    assert_eq!(
        code(&agtool(&["build", "--type", "b2", "--out", p.to_str().unwrap()])),
        0
    );
    let loaded = AlgebraFile::read(&p).unwrap().load().unwrap();
    let t = AlgebraTable::build("B2".parse().unwrap(), Default::default()).unwrap();
    assert_eq!(&loaded.table, t.table());
    assert_eq!(loaded.unit, t.unit());
    assert_eq!(loaded.epsilon, t.epsilon());
    assert_eq!(loaded.metadata.unwrap().seed, 1);
}

#[test]
fn a1_export_has_one_constant() {
    let o = agtool(&["build", "--type", "A1"]);
    let f = AlgebraFile::from_json(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!(f.dim_a, 1);
    assert_eq!(f.prod_const.len(), 1);
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let o = agtool(&["verify", "--type", "A1", "--out", r.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&r).unwrap()).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["seed"], 1);

    let o = agtool(&["verify", "--type", "B2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("[skipped]     okubo"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&agtool(&["build", "--type", "E8"])), 2);
    assert_eq!(code(&agtool(&["build", "--type", "E7"])), 2);
    assert_eq!(code(&agtool(&["build", "--type", "E6"])), 2);
    assert_eq!(code(&agtool(&["build", "--type", "A9"])), 2);
    assert_eq!(code(&agtool(&["build", "--type", "Q2"])), 2);
    assert_eq!(code(&agtool(&["build"])), 2);
    assert_eq!(code(&agtool(&["peirce", "--type", "A2"])), 2);
    assert_eq!(code(&agtool(&["unitize-scan", "/nonexistent.json"])), 2);
    let o = agtool(&["build", "--type", "E8"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("supported:"));
}

#[test]
fn malformed_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, "{\"format\": \"something-else\"}").unwrap();
    let o = agtool(&["unitize-scan", p.to_str().unwrap(), "--candidates", "1"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn unitize_scan_g2_and_a2() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = dir.path().join("g2.json");
    let a2 = dir.path().join("a2.json");
    agtool(&["build", "--type", "G2", "--out", g2.to_str().unwrap()]);
    agtool(&["build", "--type", "A2", "--out", a2.to_str().unwrap()]);

    let rep = dir.path().join("scan.json");
    let o = agtool(&[
        "unitize-scan",
        g2.to_str().unwrap(),
        "--candidates",
        "0,1,2",
        "--out",
        rep.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&rep).unwrap()).unwrap();
    assert_eq!(v["survivors"].as_array().unwrap().len(), 0);
    for c in v["report"]["candidates"].as_array().unwrap() {
        assert_eq!(c["eliminated"], true);
        assert!(c["witness"].is_object());
    }

    let o = agtool(&["unitize-scan", a2.to_str().unwrap(), "--candidates", "1"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains("survivors: [1]"));

    let o = agtool(&["unitize-scan", a2.to_str().unwrap(), "--candidates", ""]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout).unwrap().contains("survivors: []"));
}

#[test]
fn peirce_g2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("peirce.json");
    let o = agtool(&["peirce", "--type", "G2", "--count", "10", "--out", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&p).unwrap()).unwrap();
    assert!(v["distinctLambda"].as_array().unwrap().len() >= 3);
    assert_eq!(v["entries"].as_array().unwrap().len(), 10);

    let o = agtool(&["peirce", "--type", "G2", "--count", "0"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_with_supplied_rep() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.json");
    assert_eq!(
        code(&agtool(&["rep", "--type", "A2", "--out", rep.to_str().unwrap()])),
        0
    );
    let o = agtool(&["verify", "--type", "A2", "--rep", rep.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout)
        .unwrap()
        .contains("model product transports"));

    // A representation of the wrong algebra only skips the sigma checks.
    let o = agtool(&["verify", "--type", "A1", "--rep", rep.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}
