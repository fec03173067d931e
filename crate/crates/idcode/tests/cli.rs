//! End-to-end checks of the command line binary: output text, exit codes,
//! and the round trip between `gen` and the consuming subcommands.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn construct_reports_the_twin_branch_on_balanced_bipartite() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k33.graph");
    let gen = run(&["gen", "complete-bipartite:3,3", "--out", file.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0), "{}", stderr(&gen));

    let out = run(&["construct", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("size: 4"), "unexpected output:\n{text}");
    assert!(text.contains("case: case2_false_twins"), "{text}");
    assert!(text.contains("variant: main"), "{text}");
}

#[test]
fn construct_refuses_low_degree_graphs_with_exit_code_3() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(
        dir.path(),
        "c6.graph",
        "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n",
    );
    let out = run(&["construct", &c6]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr(&out).contains("maximum degree"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn construct_json_record_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sub4.graph");
    let gen = run(&["gen", "subdivided-complete:4", "--out", file.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));

    let out = run(&["construct", file.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["input"], serde_json::json!("sub4.graph"));
    assert_eq!(record["n"], serde_json::json!(16));
    let size = record["code_size"].as_u64().unwrap();
    let bound = record["bound_value"].as_f64().unwrap();
    assert!(size as f64 <= bound, "size {size} above bound {bound}");
    assert!(record["wall_time_ms"].as_f64().is_some());
}

#[test]
fn verify_accepts_and_rejects_with_matching_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_graph(dir.path(), "p3.graph", "3 2\n0 1\n1 2\n");

    let ok = run(&["verify", &p3, "--code", "0 2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("OK: 2 vertices identify the graph"));

    let fail = run(&["verify", &p3, "--code", "0,1"]);
    assert_eq!(fail.status.code(), Some(1));
    let text = stdout(&fail);
    assert!(text.starts_with("FAIL:"), "{text}");
    assert!(text.contains("unseparated: 0 1"), "{text}");

    let c4 = write_graph(dir.path(), "c4.graph", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let ok = run(&["verify", &c4, "--code", "0 1 2"]);
    assert_eq!(ok.status.code(), Some(0));

    let oob = run(&["verify", &p3, "--code", "0 7"]);
    assert_eq!(oob.status.code(), Some(2));
    assert!(stderr(&oob).contains("out of range"));
}

#[test]
fn exact_prints_the_minimum_and_rejects_twins() {
    let dir = tempfile::tempdir().unwrap();
    let c7 = write_graph(
        dir.path(),
        "c7.graph",
        "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n",
    );
    let out = run(&["exact", &c7]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("minimum size: 5"), "{}", stdout(&out));

    // A single edge is a twin pair: no identifying code exists at all.
    let k2 = write_graph(dir.path(), "k2.graph", "2 1\n0 1\n");
    let out = run(&["exact", &k2]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("twins"), "{}", stderr(&out));
}

#[test]
fn bench_families_csv_lists_known_family_rows() {
    let out = run(&["bench", "--families", "--csv", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("input,n,delta,variant,case_taken,code_size,bound_value,exact_size,wall_time_ms")
    );
    let tree_row = text
        .lines()
        .find(|l| l.starts_with("tree_2_2,"))
        .expect("tree_2_2 row present");
    let fields: Vec<&str> = tree_row.split(',').collect();
    assert_eq!(fields[1], "7", "vertex count column");
    assert_eq!(fields[5], "5", "constructed size column");
    assert_eq!(fields[7], "5", "exhaustive size column");
    assert!(
        text.contains("# girth>=5 [external]:"),
        "missing girth marker:\n{text}"
    );
    assert!(text.contains("0 bound violation(s)"), "{text}");
}

#[test]
fn gen_writes_canonical_edge_lists() {
    let out = run(&["gen", "kary:2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("7 6\n"), "{text}");
    assert_eq!(text.lines().count(), 7);

    let bad = run(&["gen", "cycle:3"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stderr(&bad).contains("at least 4"));
}

#[test]
fn malformed_files_exit_with_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(dir.path(), "bad.graph", "3 1\n5 9\n");
    let out = run(&["construct", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"), "{}", stderr(&out));

    let missing = run(&["exact", "/nonexistent/never.graph"]);
    assert_eq!(missing.status.code(), Some(2));
}
