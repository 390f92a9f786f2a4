//! End-to-end tests against the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ncg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_q8_reports_expected_values() {
    let out = ncg(&["analyze", "Q:8"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["spec"], "Q:8");
    assert_eq!(report["is_ac"]["value"], true);
    assert_eq!(report["is_matroid"]["value"]["value"], true);
    assert_eq!(report["omega"]["value"]["value"], 3);
}

#[test]
fn analyze_s4_reports_witness() {
    let out = ncg(&["analyze", "S:4"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["is_ac"]["value"], false);
    assert!(report["witnesses"]["ac_failure"].is_array());
    assert!(report["witnesses"]["non_matroid_triple"].is_array());
}

#[test]
fn analyze_c7_is_abelian_with_empty_graph() {
    let out = ncg(&["analyze", "C:7"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["is_abelian"]["value"], true);
    assert_eq!(report["complement_component_sizes"]["value"], serde_json::json!([]));
}

#[test]
fn analyze_multiple_specs_preserves_order() {
    let out = ncg(&["analyze", "Q:8", "C:3", "D:4"]);
    assert!(out.status.success());
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let specs: Vec<&str> = reports.iter().map(|r| r["spec"].as_str().unwrap()).collect();
    assert_eq!(specs, ["Q:8", "C:3", "D:4"]);
}

#[test]
fn analyze_is_byte_stable() {
    let a = stdout(&ncg(&["analyze", "D:6"]));
    let b = stdout(&ncg(&["analyze", "D:6"]));
    // Timings vary run to run; everything else must be identical.
    let strip = |s: &str| -> String {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("timing_us");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn analyze_bad_spec_exits_2() {
    let out = ncg(&["analyze", "Q:7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Q"));
}

#[test]
fn analyze_above_cap_is_lazy() {
    let out = ncg(&["analyze", "S:8"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["order"]["value"], 40320);
    assert_eq!(report["is_matroid"]["value"]["value"], false);
    assert_eq!(report["omega"]["status"], "skipped");
}

#[test]
fn analyze_product_above_cap_exits_2() {
    let out = ncg(&["analyze", "S:8xC:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_d6_dot_has_ten_vertices() {
    let out = ncg(&["export", "D:6", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert_eq!(dot.matches("label=").count(), 10);
}

#[test]
fn export_q8_complement_csv_has_three_edges() {
    let out = ncg(&["export", "Q:8", "--complement", "--format", "csv"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert_eq!(csv.lines().filter(|l| !l.is_empty()).count(), 4); // header + 3 edges
}

#[test]
fn export_c5_is_an_empty_graph() {
    let out = ncg(&["export", "C:5"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.contains("graph"));
    assert_eq!(dot.matches("label=").count(), 0);
}

#[test]
fn export_import_round_trip() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("ncg_cli_roundtrip_c4.json");
    let out = ncg(&[
        "export",
        "C:4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = ncg(&["import", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["is_abelian"]["value"], true);
    assert!(report["spec"].as_str().unwrap().starts_with("imported:"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn import_non_associative_table_exits_2() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("ncg_cli_loop5.json");
    std::fs::write(
        &path,
        r#"{"order":5,"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#,
    )
    .unwrap();
    let out = ncg(&["import", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("associativity"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_with_low_cap_skips_and_exits_0() {
    let out = ncg(&["verify", "--max-order", "30"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("SKIP"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_with_injected_corrupt_table_exits_1() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("ncg_cli_inject_loop5.json");
    std::fs::write(
        &path,
        r#"{"order":5,"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#,
    )
    .unwrap();
    let out = ncg(&[
        "verify",
        "--max-order",
        "30",
        "--inject",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn families_lists_all_six() {
    let out = ncg(&["families"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for tag in ["S:", "A:", "D:", "Q:", "C:", "H:"] {
        assert!(text.contains(tag), "missing {tag}");
    }
    assert!(text.contains("2n"));
}

#[test]
fn unknown_flag_exits_2() {
    let out = ncg(&["analyze", "Q:8", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
