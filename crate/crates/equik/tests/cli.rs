//! End-to-end tests of the binary: exit codes, output shapes and
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equik"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn cf_enum_d3_partition() {
    let out = run(&["cf-enum", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["included"].as_array().unwrap().len(), 14);
    assert_eq!(v["excluded"].as_array().unwrap().len(), 2);
}

#[test]
fn cf_enum_strict_mode_and_table() {
    let out = run(&["cf-enum", "--d", "2", "--mode", "strict-literal"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["included"].as_array().unwrap().len(), 2);
    let out = run(&["cf-enum", "--d", "2", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("schema 1"));
}

#[test]
fn catalogue_s4_entries() {
    let out = run(&["catalogue", "--kind", "S4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    let orders: Vec<u64> = entries.iter().map(|e| e["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![2, 6, 24, 4, 8]);
}

#[test]
fn mset_s4_points() {
    let out = run(&["mset", "--kind", "S4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["size"], 21);
    assert_eq!(v["points"].as_array().unwrap().len(), 21);
}

#[test]
fn fmatrix_f2() {
    let out = run(&["fmatrix", "--kind", "F2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["rank"], 5);
    assert_eq!(v["full_column_rank"], true);
}

#[test]
fn decompose_column_selection() {
    let phi = fixture("phi_s3_column.json");
    let out = run(&["decompose", "--kind", "S3", "--phi", phi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let coeffs = v["coefficients"].as_array().unwrap();
    let by_label: Vec<(String, u64)> = coeffs
        .iter()
        .map(|c| (c["label"].as_str().unwrap().to_string(), c["n"].as_u64().unwrap()))
        .collect();
    assert_eq!(
        by_label,
        vec![("1".into(), 0), ("S2".into(), 0), ("S3".into(), 1)]
    );
}

#[test]
fn yprime_and_kconv_pipeline() {
    let phi = fixture("phi_s3_column.json");
    let out = run(&["yprime", "--kind", "S3", "--phi", phi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["size"], 1);
    assert_eq!(v["action_law"], true);
    assert_eq!(v["stabilizer_conjecture"], true);
    assert_eq!(v["realizes_phi"], true);

    let out = run(&["kconv", "--kind", "S3", "--phi", phi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["dimension_identity"], true);
}

#[test]
fn solver_errors_exit_2() {
    for name in ["phi_s3_inconsistent.json", "phi_s3_nonnatural.json"] {
        let phi = fixture(name);
        let out = run(&["decompose", "--kind", "S3", "--phi", phi.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn validation_errors_exit_3() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["decompose", "--kind", "S3", "--phi", "/nonexistent/phi.json"],
        vec!["catalogue", "--kind", "Q8"],
        vec!["catalogue", "--kind", "F2"],
        vec!["catalogue", "--kind", "S4", "--d", "2"],
        vec!["catalogue", "--kind", "S4", "--format", "yaml"],
        vec!["cf-enum", "--d", "3", "--mode", "bogus"],
        vec!["cf-enum", "--d", "9"],
        vec!["kconv", "--kind", "S3", "--phi", "x.json", "--check", "bogus"],
        vec!["not-a-subcommand"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
    }
    let bad_schema = fixture("phi_bad_schema.json");
    let out = run(&["decompose", "--kind", "S3", "--phi", bad_schema.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let malformed = fixture("phi_malformed.json");
    let out = run(&["decompose", "--kind", "S3", "--phi", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // wrong group in the phi file
    let phi = fixture("phi_s3_column.json");
    let out = run(&["decompose", "--kind", "S4", "--phi", phi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["catalogue", "--help"]).status.code(), Some(0));
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify"]);
    let b = run(&["verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let t1 = run(&["verify", "--format", "table"]);
    let t2 = run(&["verify", "--format", "table"]);
    assert_eq!(t1.status.code(), Some(0));
    assert_eq!(t1.stdout, t2.stdout);
    assert_ne!(a.stdout, t1.stdout);
}
