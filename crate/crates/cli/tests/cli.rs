// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.
use std::process::{Command, Output};

fn curling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(out).trim()).expect("stdout is JSON")
}

#[test]
fn seq_cn_prints_curling_number() {
    let out = curling(&["seq-cn", "1,2,1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
    let naive = curling(&["seq-cn", "1,2,1,2", "--algo", "naive"]);
    assert_eq!(stdout(&naive), "2\n");
}

#[test]
fn seq_extend_appends() {
    let out = curling(&["seq-extend", "2,3", "--steps", "3"]);
    assert_eq!(stdout(&out), "2,3,1,1,2\n");
}

#[test]
fn conjecture_reports_max_steps() {
    let out = curling(&["conjecture", "--alphabet", "2,3", "--max-len", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("starts checked: 14"), "{text}");
    assert!(text.contains("max steps: "), "{text}");
    assert!(text.contains("cap-exhausted starts: none"), "{text}");
}

#[test]
fn graph_cn_of_complete_graph() {
    let out = curling(&["graph-cn", "--gen", "complete:5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["cn"], 5);
    assert_eq!(v["cnc"], "5");
    assert_eq!(v["ic"], 1);
    assert_eq!(v["vartheta"], "1");
}

#[test]
fn power_round_trips_through_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p6r2.txt");
    let file = file.to_str().unwrap();
    let built = curling(&["power", "--gen", "path:6", "-r", "2", "--out", file]);
    assert!(built.status.success());
    let read = curling(&["graph-cn", "--edges", file]);
    assert!(read.status.success());
    assert_eq!(json(&built), json(&read));
    let text = std::fs::read_to_string(file).unwrap();
    assert!(text.starts_with("6 9\n"), "{text}");
}

#[test]
fn power_beyond_diameter_warns() {
    let out = curling(&["power", "--gen", "path:4", "-r", "5"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("complete"));
    assert_eq!(json(&out)["cn"], 4);
}

#[test]
fn table_shows_cycle_row() {
    let out = curling(&["table", "--max-n", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let cycles = text.split("## ").find(|s| s.contains("(C_n)")).unwrap();
    let line = cycles.lines().find(|l| l.starts_with("| n=8 ")).unwrap();
    assert_eq!(line.matches("| 8 ").count(), 4, "{line}");
}

#[test]
fn audit_formats() {
    let out = curling(&[
        "audit",
        "--formula",
        "F8",
        "--range",
        "n=3..12",
        "--range",
        "r=1..11",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["formula_id"], "F8");
    assert!(v["summary"]["gap"].as_u64().unwrap() > 0);
    assert_eq!(v["summary"]["uncovered"], 0);

    let csv = curling(&["audit", "--formula", "F5", "--format", "csv"]);
    let text = stdout(&csv);
    assert!(text.starts_with("formula_id,params,"), "{text}");
    assert_eq!(text.lines().count(), 11);

    let md = curling(&[
        "audit",
        "--formula",
        "F16",
        "--range",
        "spine=3..4",
        "--format",
        "md",
        "--seed",
        "3",
        "--random",
        "2",
    ]);
    assert!(md.status.success());
    assert!(stdout(&md).contains("(seed 3)"));
}

#[test]
fn audit_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f17.json");
    let out = curling(&["audit", "--formula", "F17", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    assert_eq!(v["summary"]["match"], 45);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["seq-cn", "1,x"][..],
        &["seq-cn", ""],
        &["graph-cn"],
        &["graph-cn", "--gen", "hypercube:3"],
        &["graph-cn", "--gen", "cycle:2"],
        &["audit", "--formula", "F21"],
        &["audit", "--formula", "F8", "--range", "n=3"],
        &["audit", "--formula", "F8", "--seed", "1"],
        &["table", "--max-n", "2"],
        &["power", "--gen", "path:3", "-r", "0"],
    ] {
        let out = curling(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn formulas_lists_twenty() {
    let v = json(&curling(&["formulas"]));
    assert_eq!(v.as_array().unwrap().len(), 20);
}
