//! End-to-end runs of the `ctsing` binary: output shape, exit codes,
//! and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ctsing"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ctsing-test-{name}-{}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const TRIANGLE: &str = r#"{"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"],["3","1"]]}"#;

#[test]
fn classify_triangle() {
    let path = write_temp("triangle", TRIANGLE);
    let out = bin().args(["classify"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("type A, 1 oriented triangle(s)"));
}

#[test]
fn invariants_triangle_json() {
    let path = write_temp("triangle-inv", TRIANGLE);
    let out = bin()
        .args(["invariants", "--format", "json"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"], "A");
    assert_eq!(v["det"], "2");
    assert_eq!(v["structural"], serde_json::json!([3]));
    assert_eq!(v["agreement"], true);
    // Byte-identical across runs.
    let again = bin()
        .args(["invariants", "--format", "json"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn cartan_with_relations() {
    let path = write_temp("triangle-cartan", TRIANGLE);
    let out = bin()
        .args(["cartan", "--show-relations"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("det = 2"));
    assert!(text.contains("= 0"));
}

#[test]
fn mutate_path_gives_triangle() {
    let path = write_temp(
        "chain",
        r#"{"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]]}"#,
    );
    let out = bin()
        .args(["mutate", "--vertex", "2"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let f: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arrows = f["arrows"].as_array().unwrap();
    assert_eq!(arrows.len(), 3, "mutation at the middle closes a 3-cycle");
}

#[test]
fn mutation_class_count() {
    let path = write_temp(
        "a3",
        r#"{"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]]}"#,
    );
    let out = bin().args(["mutation-class"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("members: 4"));
}

#[test]
fn all_orientations_flag_and_edge_rejection() {
    let edge_file = r#"{"vertices":["1","2"],"edges":[["1","2"]]}"#;
    let path = write_temp("edge", edge_file);
    // Without the flag: input error, exit 2.
    let out = bin().args(["invariants"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // With the flag: both orientations agree.
    let out = bin()
        .args(["invariants", "--all-orientations"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("det:         1"));
}

#[test]
fn malformed_inputs_exit_2() {
    let loops = write_temp("loop", r#"{"vertices":["1"],"arrows":[["1","1"]]}"#);
    let out = bin().args(["classify"]).arg(&loops).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let two_cycle = write_temp(
        "two-cycle",
        r#"{"vertices":["1","2"],"arrows":[["1","2"],["2","1"]]}"#,
    );
    let out = bin().args(["classify"]).arg(&two_cycle).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["classify", "/nonexistent/file"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_error_object() {
    let loops = write_temp("loop-json", r#"{"vertices":["1"],"arrows":[["1","1"]]}"#);
    let out = bin()
        .args(["classify", "--format", "json"])
        .arg(&loops)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["error"].is_string());
}

#[test]
fn fixture_listing_and_dump() {
    let out = bin().args(["fixture", "--list"]).output().unwrap();
    assert!(out.status.success());
    let listing = stdout(&out);
    assert_eq!(listing.lines().count(), 36);
    assert!(listing.lines().any(|l| l == "E6-1"));

    let out = bin().args(["fixture", "A_104"]).output().unwrap();
    assert!(out.status.success());
    let f: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(f["vertices"].as_array().unwrap().len(), 7);

    let out = bin().args(["fixture", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn named_quivers_share_their_polynomial() {
    // The three named quivers: A_104 (E7), and A_319/A_15 (E8) with the
    // same associated polynomial.
    let a319 = ctsing::fixtures::by_name("A_319").unwrap();
    let a15 = ctsing::fixtures::by_name("A_15").unwrap();
    assert_eq!(a319.expected_polynomial(), a15.expected_polynomial());
    // And A_319 really is mutation-equivalent to A_15.
    let class = a15.quiver().mutation_class(100_000).unwrap();
    assert!(class.contains(&a319.quiver().canonical_form().unwrap()));
}

#[test]
fn hereditary_e6_invariants_text() {
    let out = bin().args(["fixture", "E6-1"]).output().unwrap();
    let path = write_temp("e6-1", &stdout(&out));
    let out = bin()
        .args(["invariants", "--all-orientations"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x^6 - x^5 + x^3 - x + 1"));
    assert!(text.contains("det:         1"));
}
