use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn innate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_innate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().expect("temp file");
    f.write_all(text.as_bytes()).expect("write");
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().expect("utf-8 path")
}

#[test]
fn line2_at_psl29_is_special() {
    let out = innate(&["special-pair", "line2", "--d", "2", "--q0", "3", "--a", "2", "--r", "2", "--j", "1", "--scan"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["special"], true);
    assert_eq!(v["scan"]["agrees"], true);
}

#[test]
fn s4_has_an_abelian_plinth() {
    let group = temp_file("degree 4\n1 2 3 0\n1 0 2 3\n");
    let out = innate(&["classify", path(&group)]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "abelian-plinth");
    assert_eq!(v["plinth_order"], 4);
}

#[test]
fn constructed_group_classifies_as_proper() {
    let out = innate(&["construct", "scaled-projective", "--p", "5", "--r", "2", "--names", "sl,z", "--perm"]);
    assert_eq!(out.status.code(), Some(0));
    let group = temp_file(&stdout(&out));
    let out = innate(&["classify", path(&group)]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "proper");
    assert_eq!((v["degree"].as_u64(), v["rank"].as_u64(), v["special"].as_bool()), (Some(12), Some(4), Some(true)));
}

#[test]
fn selected_catalog_entries_verify() {
    let out = innate(&["catalog", "verify", "--only", "psl2-5-r2,psl2-9-r4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows_passed"], 10);
    assert_eq!(v["rows_failed"], 0);
}

#[test]
fn catalog_reports_are_reproducible() {
    let args = ["catalog", "verify", "--only", "a5-r3,psl3-2-flags-c4"];
    assert_eq!(innate(&args).stdout, innate(&args).stdout);
}

#[test]
fn unknown_entry_is_an_input_error() {
    assert_eq!(innate(&["catalog", "verify", "--only", "no-such-entry"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(innate(&["special-pair", "line2"]).status.code(), Some(2));
    assert_eq!(innate(&["classify", "/nonexistent/group.perm"]).status.code(), Some(2));
}

const Z14_DESIGN: &str = "points 14\n\
0 1 4 6\n1 2 5 7\n2 3 6 8\n3 4 7 9\n4 5 8 10\n5 6 9 11\n6 7 10 12\n\
7 8 11 13\n8 9 12 0\n9 10 13 1\n10 11 0 2\n11 12 1 3\n12 13 2 4\n13 0 3 5\n";

#[test]
fn pls_verify_accepts_the_z14_design() {
    let design = temp_file(Z14_DESIGN);
    let group = temp_file("degree 14\n1 2 3 4 5 6 7 8 9 10 11 12 13 0\n0 1 5 10 6 2 4 7 8 12 3 13 9 11\n");
    let out = innate(&["pls", "verify", path(&design), path(&group)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["preserved"].as_bool(), v["rank"].as_u64()), (Some(true), Some(3)));
}

#[test]
fn pls_verify_rejects_a_non_automorphism() {
    let design = temp_file(Z14_DESIGN);
    let group = temp_file("degree 14\n1 2 3 4 5 6 7 8 9 10 11 12 13 0\n(0,1)\n");
    let out = innate(&["pls", "verify", path(&design), path(&group)]);
    assert_eq!(out.status.code(), Some(1));
}
