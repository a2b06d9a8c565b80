//! End-to-end checks of the `braided` binary: flags, output shapes and
//! exit codes (0 all-hold, 1 semantic failure, 2 input error, 3 budget).

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(path: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(path)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braided"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_trivial_all_conditions_hold() {
    let out = run(&["check", &data("solutions/trivial_ab.json"), "--conditions", "ybe"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ybe: true"));
}

#[test]
fn check_rho_cancellation_fails_with_witness() {
    let out = run(&[
        "check",
        &data("solutions/sec22_rho.json"),
        "--conditions",
        "2cancellative",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("2cancellative: false"));
    assert!(text.contains("r(x, x) = (y, x)"), "{text}");
}

#[test]
fn check_full_profile_exits_zero() {
    let out = run(&["check", &data("solutions/sec5_X.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("sec5_X (|X| = 12)"));
    assert!(text.contains("lri: true"));
}

#[test]
fn check_rejects_malformed_input() {
    let out = run(&["check", &data("families/sec5_families.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn monoid_braided_base_passes() {
    let out = run(&["monoid", &data("solutions/sec5_Y.json"), "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("M3: true"));
    assert!(text.contains("r_S ybe: true"));
}

#[test]
fn monoid_non_braided_base_fails() {
    let out = run(&["monoid", &data("solutions/sec22_l1r1.json"), "--degree", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("note: base does not obey the YBE"));
    assert!(text.contains("LR3: false") || text.contains("r_S ybe: false"));
}

#[test]
fn monoid_notes_involutivity_on_rho() {
    let out = run(&[
        "monoid",
        &data("solutions/sec22_rho.json"),
        "--degree",
        "3",
        "--verify",
        "matched_pair,m3,lr3,ybe,strong,involutive",
    ]);
    // involutivity transfer reports false because the base is not involutive
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("note: base not involutive"));
    assert!(text.contains("r_S involutive: skipped"));
    assert!(text.contains("M3: true"));
}

#[test]
fn extend_reports_ybe_stu_orbits() {
    let out = run(&[
        "extend",
        &data("solutions/sec5_X.json"),
        &data("solutions/sec5_Y.json"),
        &data("ground/sec5_ground_r1.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("YBE: true; stu: false; orbits: 3"), "{text}");
    assert!(text.contains("ml1: true"));
    assert!(text.contains("stu: false"));
}

#[test]
fn extend_runs_suites() {
    let out = run(&[
        "extend",
        &data("solutions/sec5_X.json"),
        &data("solutions/sec5_Y.json"),
        &data("ground/sec5_ground_r3.json"),
        "--degree",
        "2",
        "--suites",
        "BZ,matched_pair_ST",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("YBE: true; stu: true; orbits: 3"));
    assert!(text.contains("suite BZ: Passed"));
    assert!(text.contains("suite matched_pair_ST: Passed"));
}

#[test]
fn enumerate_full_table_counts() {
    let out = run(&[
        "enumerate",
        &data("solutions/trivial_ab.json"),
        &data("solutions/trivial_c.json"),
        "--filter",
        "ybe",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("count: 2"));
}

#[test]
fn enumerate_budget_exceeded() {
    let out = run(&[
        "enumerate",
        &data("solutions/sec5_X.json"),
        &data("solutions/sec5_Y.json"),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn enumerate_family_mode() {
    let out = run(&[
        "enumerate",
        &data("solutions/sec5_X.json"),
        &data("solutions/sec5_Y.json"),
        "--mode",
        "permutation_family",
        "--families",
        &data("families/sec5_families.json"),
        "--filter",
        "ybe,stu",
        "--limit",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn graph_writes_stable_dot() {
    let out = run(&["graph", &data("solutions/sec5_Z3.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let golden = std::fs::read_to_string(data("golden/sec5_Z3_gamma.dot")).unwrap();
    assert_eq!(text, golden);
}

#[test]
fn iso_distinguishes_extensions() {
    let out = run(&["iso", &data("solutions/sec5_Z1.json"), &data("solutions/sec5_Z2.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not isomorphic"));
    let out = run(&["iso", &data("solutions/sec5_Z1.json"), &data("solutions/sec5_Z1.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("isomorphic"));
}

#[test]
fn catalog_lists_and_verifies() {
    let out = run(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sec22_rho"));
    let out = run(&["catalog", "sec22_rho"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("profile matches"));
    let out = run(&["catalog", "no_such_key"]);
    assert_eq!(out.status.code(), Some(2));
}
