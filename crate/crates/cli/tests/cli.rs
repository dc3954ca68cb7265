use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tpalg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tpalg")).args(args).current_dir(dir).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn exported_tp_algebra_passes_every_identity() {
    let dir = tempfile::tempdir().unwrap();
    let out = tpalg(&["catalog", "export", "tp_sl2_gf3(1,0)", "-o", "sl2_tp.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = tpalg(&["check", "sl2_tp.json", "--identities", "all"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["all_pass"], true);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 20);
    assert!(reports.iter().all(|r| r["verdict"] == "PASS"));
}

#[test]
fn lie_double_fails_jacobi_with_the_expected_defect() {
    let dir = tempfile::tempdir().unwrap();
    tpalg(&["catalog", "export", "nonlie_remark_q", "-o", "nonlie_remark.json"], dir.path());
    let out = tpalg(&["double", "nonlie_remark.json", "--kind", "lie", "-o", "double.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = tpalg(&["check", "double.json", "--identities", "jacobi", "--at", "e3s,e3s,e3s"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["reports"][0]["verdict"], "FAIL");
    let d = &v["at"]["defects"][0]["defect"];
    assert_eq!(d["text"], "-3*e1s - 3*e2s");
    assert_eq!(d["coords"], serde_json::json!(["0", "0", "0", "-3", "-3", "0"]));
}

#[test]
fn missing_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = tpalg(&["simple", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    for bad in [
        &["check", "sl2", "--identities", "nonsense"][..],
        &["witt", "--q", "0:1", "--window", "3"],
        &["double", "grassmann1_q", "--kind", "lie"],
        &["frobnicate"],
    ] {
        assert_eq!(tpalg(bad, dir.path()).status.code(), Some(2), "{bad:?}");
    }
    std::fs::write(dir.path().join("broken.json"), "{ not json").unwrap();
    assert_eq!(tpalg(&["check", "broken.json"], dir.path()).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["structure", "radical_demo_q"][..],
        &["simple", "solvable3_q", "--strategy", "meataxe", "--seed", "7"],
        &["halfder", "sl2(GF3)"],
        &["catalog", "show", "tp_sl2_gf3(1,0)"],
        &["witt", "--q", "-1:2", "--window", "-2..2"],
        &["double", "tp_sl2_gf3(1,0)"],
    ] {
        let a = tpalg(args, dir.path());
        let b = tpalg(args, dir.path());
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn simplicity_and_structure_reports() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&tpalg(&["simple", "tp_sl2_gf3(1,0)", "--strategy", "exhaustive"], dir.path()));
    assert_eq!(v["verdict"], "SIMPLE");
    assert_eq!(v["work"], 13);
    let v = json(&tpalg(&["simple", "tp_sl2_gf3(1,0)", "--product", "circ"], dir.path()));
    assert_eq!(v["verdict"], "NOT_SIMPLE");
    assert_eq!(v["witness"]["basis"], serde_json::json!([["1", "0", "0"], ["0", "1", "0"]]));
    let v = json(&tpalg(&["structure", "solvable3_q"], dir.path()));
    let dims: Vec<u64> = v["derived_series"].as_array().unwrap().iter().map(|s| s["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![3, 2, 0]);
    assert_eq!(v["unit"], "e3");
    assert_eq!(v["solvable"], true);
    assert_eq!(v["nilpotent_bracket"], false);
    let out = tpalg(&["simple", "sl2(GF3)", "--strategy", "exhaustive", "--bound", "5"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn halfder_reports_a_canonical_basis() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&tpalg(&["halfder", "sl2(Q)"], dir.path()));
    assert_eq!(v["dim"], 1);
    assert_eq!(v["basis"][0], serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]));
    let v = json(&tpalg(&["halfder", "grassmann1_q", "--parity", "1"], dir.path()));
    assert_eq!(v["dim"], 2);
}

#[test]
fn catalog_commands() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&tpalg(&["catalog", "list"], dir.path()));
    assert!(v.as_array().unwrap().iter().any(|e| e["key"] == "solvable3_q"));
    let out = tpalg(&["catalog", "verify"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["all_hold"], true);
    let out = tpalg(&["catalog", "export", "solvable3_q"], dir.path());
    let v = json(&out);
    assert_eq!(v["name"], "solvable3_q");
    assert_eq!(v["dim"], 3);
    assert_eq!(tpalg(&["catalog", "show", "nope"], dir.path()).status.code(), Some(2));
}

#[test]
fn witt_windows() {
    let dir = tempfile::tempdir().unwrap();
    for q in ["0:1", "0:1,1:1", "1:2"] {
        let out = tpalg(&["witt", "--q", q, "--window", "-3..3"], dir.path());
        assert_eq!(out.status.code(), Some(0), "{q}");
        let v = json(&out);
        for r in v["reports"].as_array().unwrap() {
            assert_eq!(r["verdict"], "PASS");
            assert_eq!(r["triples_checked"], 343);
        }
        assert_eq!(v["invertible_iff_unital"], true);
    }
    let v = json(&tpalg(&["witt", "--q", "1:2"], dir.path()));
    assert_eq!(v["laurent_inverse"], "1/2*e-1");
    assert_eq!(v["unit_in_window"], "1/2*e-1");
}
