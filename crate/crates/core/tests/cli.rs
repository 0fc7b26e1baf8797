//! End-to-end runs of the `trimat` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn trimat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trimat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// A scratch file unique to this test process and name.
fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("trimat-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn predicates_exit_zero_on_true_and_one_on_false() {
    let corners = scratch("corners.txt", "4\n3 0 0\n0 3 0\n");
    let corners = corners.to_str().unwrap();
    assert_eq!(
        trimat(&["indep", "--cells", corners]).status.code(),
        Some(0)
    );
    assert_eq!(
        trimat(&["basis", "--cells", corners]).status.code(),
        Some(1)
    );
    let o = trimat(&["rank", "--cells", corners]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "2\n".to_string()));
}

#[test]
fn dependent_set_names_a_witness() {
    let o = trimat(&["indep", "--full", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("(0,0,0,2) holds 3 cells"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn parse_errors_exit_two_with_location() {
    let bad = scratch("bad-sum.txt", "4\n2 2 0\n");
    let o = trimat(&["rank", "--cells", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("line 2: coordinate sum 4 ≠ n−1 = 3"),
        "{}",
        stderr(&o)
    );

    let dup = scratch("dup.json", r#"{"n": 3, "cells": [[1,1,0],[1,1,0]]}"#);
    let o = trimat(&["rank", "--cells", dup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("cells[1]: duplicate cell (1, 1, 0)"),
        "{}",
        stderr(&o)
    );

    let o = trimat(&["rank", "--cells", "/nonexistent/trimat/cells.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(trimat(&["rank"]).status.code(), Some(2));
    assert_eq!(trimat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        trimat(&["annulus", "--n", "4", "--tri", "1,1,1,2"])
            .status
            .code(),
        Some(2)
    );
    let f = scratch("n4.txt", "4\n3 0 0\n");
    assert_eq!(
        trimat(&["rank", "--n", "3", "--cells", f.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exhausted_budget_exits_three() {
    let o = trimat(&[
        "enum",
        "--n",
        "5",
        "--kind",
        "independents",
        "--budget",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn closure_output_reparses() {
    let f = scratch("pair.txt", "3\n2 0 0\n1 1 0\n");
    let out = scratch("closure.json", "");
    let o = trimat(&[
        "closure",
        "--cells",
        f.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = fs::read_to_string(&out).unwrap();
    let o = trimat(&["rank", "--cells", out.to_str().unwrap()]);
    assert_eq!(stdout(&o), "2\n", "{written}");
}

#[test]
fn tile_json_feeds_render() {
    let f = scratch("corners4.txt", "4\n3 0 0\n0 3 0\n");
    let saved = scratch("tiling.json", "");
    let o = trimat(&[
        "tile",
        "--cells",
        f.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        saved.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = trimat(&[
        "render",
        "--tiling",
        saved.to_str().unwrap(),
        "--format",
        "svg",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let svg = stdout(&o);
    // two holes, four rhombi, two type-1 trapezoids
    assert_eq!(svg.matches(r#"class="hole""#).count(), 2);
    assert_eq!(svg.matches(r#"class="rhombus""#).count(), 4);
    assert_eq!(svg.matches(r#"class="t1""#).count(), 2);
}

#[test]
fn infeasible_tiling_exits_one() {
    // T_2 has one down cell, too few for two type-1 trapezoids
    let o = trimat(&["tile", "--full", "--n", "2", "--objective", "exact-t1=2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn annulus_ascii_marks_the_removed_triangle() {
    let o = trimat(&[
        "annulus", "--n", "4", "--tri", "1,1,1,1", "--format", "ascii",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.matches('#').count(), 1);
    assert!(!text.contains('.'));
}

#[test]
fn verify_is_reproducible_and_reports_fields() {
    let args = [
        "verify",
        "--n",
        "3",
        "--theorem",
        "basis_tiling",
        "--seed",
        "3",
    ];
    let (a, b) = (trimat(&args), trimat(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let r = &reports[0];
    for field in [
        "theorem",
        "n",
        "budget",
        "budget_status",
        "seed",
        "examined",
        "disagreements",
        "ok",
    ] {
        assert!(r.get(field).is_some(), "missing {field}");
    }
    assert_eq!(r["examined"], 20);
    assert_eq!(r["budget_status"], "exhaustive");
}

#[test]
fn verify_at_two_reports_the_empty_set() {
    let o = trimat(&["verify", "--n", "2", "--theorem", "indep_tiling"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports[0]["disagreement_total"], 1);
    assert_eq!(
        reports[0]["disagreements"][0]["cells"],
        serde_json::json!([{"n": 2, "cells": []}])
    );
}
