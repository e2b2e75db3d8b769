use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn drs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drs"))
        .args(args)
        .env_remove("DRS_WORK_LIMIT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = drs(&full);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TREE13: &str = "g 13 12\n0 1\n0 2\n0 3\n1 4\n1 5\n2 6\n2 7\n3 8\n3 9\n7 10\n8 11\n9 12\n";

#[test]
fn gen_then_stats_and_exact_solve() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = dir.path().join("a5.g");
    assert!(drs(&["gen", "ak", "--k", "5", "-o", path(&a5)]).status.success());

    let (code, v) = json(&["stats", path(&a5)]);
    assert_eq!(code, 0);
    assert_eq!(v["vertices"], 12);
    assert_eq!(v["edges"], 16);
    assert_eq!(v["max_degree"], 5);

    let (code, v) = json(&["solve", "--exact", "--line", path(&a5)]);
    assert_eq!(code, 0);
    assert_eq!(v["psi"], 3);
    assert_eq!(v["verified"], true);
    assert_eq!(v["set"].as_array().unwrap().len(), 3);
}

#[test]
fn line_flag_is_not_implied() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = dir.path().join("a5.g");
    drs(&["gen", "ak", "--k", "5", "-o", path(&a5)]);
    // A_5 itself and L(A_5) have different Ψ
    let (_, on_g) = json(&["solve", "--exact", path(&a5)]);
    let (_, on_l) = json(&["solve", "--exact", "--line", path(&a5)]);
    assert_eq!(on_g["psi"], 4);
    assert_eq!(on_l["psi"], 3);
}

#[test]
fn tree_construct_on_example() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.g");
    std::fs::write(&t, TREE13).unwrap();
    let (code, v) = json(&["tree", "--construct", path(&t)]);
    assert_eq!(code, 0);
    assert_eq!(v["psi"], 4);
    assert_eq!(v["verified"], true);
    assert_eq!(v["set"], serde_json::json!(["1_5", "7_10", "8_11", "9_12"]));
    assert_eq!(v["stats"], serde_json::json!({"sigma": 6, "ex": 3, "ex_prime": 2}));

    let (_, v) = json(&["tree", "--psi", path(&t)]);
    assert_eq!(v["psi"], 4);
    assert_eq!(v["mu"], 3);
    assert_eq!(v["psi_tree"], 6);
}

#[test]
fn json_key_order() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.g");
    std::fs::write(&t, TREE13).unwrap();
    let out = drs(&["tree", "--construct", path(&t), "--json"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("verb") < pos("psi") && pos("psi") < pos("set"));
    assert!(pos("set") < pos("verified") && pos("verified") < pos("stats"));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("a2.g");
    drs(&["gen", "ak", "--k", "2", "-o", path(&g)]);
    let (code, v) = json(&["verify", path(&g), "--line", "--set", "w0_w'0,w1_w'1"]);
    assert_eq!((code, &v["verified"]), (0, &Value::Bool(true)));
    // reversed endpoint order is accepted
    let (code, _) = json(&["verify", path(&g), "--line", "--set", "w'0_w0,w'1_w1"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["verify", path(&g), "--line", "--set", "u_v1,u_v2"]);
    assert_eq!((code, &v["verified"]), (1, &Value::Bool(false)));
    let out = drs(&["verify", path(&g), "--line", "--set", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(drs(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(drs(&["solve", "missing.g"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g");
    std::fs::write(&bad, "g 3 2\n0 1\n0 1\n").unwrap();
    let out = drs(&["stats", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn work_limit_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k6.g");
    drs(&["gen", "complete", "--n", "6", "-o", path(&g)]);
    let out = drs(&["solve", "--exact", "--line", path(&g), "--work-limit", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_drs"))
        .args(["solve", "--exact", "--line", path(&g)])
        .env("DRS_WORK_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bounds_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.g");
    drs(&["gen", "complete", "--n", "4", "-o", path(&g)]);
    let (code, v) = json(&["bounds", path(&g)]);
    assert_eq!(code, 0);
    assert_eq!(v["bounds"], serde_json::json!({"lower": 2, "upper": 3}));
    assert_eq!(v["verified"], true);
    assert_eq!(v["set"], serde_json::json!(["0_1", "0_2", "0_3"]));

    let t = dir.path().join("t.g");
    std::fs::write(&t, TREE13).unwrap();
    let (_, v) = json(&["decompose", path(&t), "--line"]);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 7);
    assert_eq!(v["cut_vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn gen_writes_plain_graph_to_stdout() {
    let out = drs(&["gen", "path", "--n", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "g 3 2\n0 1\n1 2\n");
}

#[test]
fn linegraph_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("tk.g");
    let l = dir.path().join("ltk.g");
    drs(&["gen", "tk", "--k", "2", "-o", path(&g)]);
    assert!(drs(&["linegraph", path(&g), "-o", path(&l)]).status.success());
    let (_, v) = json(&["solve", "--exact", path(&l)]);
    assert_eq!(v["psi"], 4);
}

#[test]
fn reduce_single_triple() {
    let (code, v) = json(&["reduce", "--n", "1", "--triples", "0,0,0", "--with-matching"]);
    assert_eq!(code, 0);
    assert_eq!(v["vertices"], 13);
    assert_eq!(v["edges"], 14);
    assert_eq!(v["k"], 5);
    assert_eq!(v["psi"], 5);
    assert_eq!(v["verified"], true);
}

#[test]
fn reduce_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("seven_triples.3dm");
    std::fs::write(&f, "3dm 3 7\n0 0 0\n0 1 2\n0 2 1\n1 0 1\n1 1 2\n2 2 0\n2 2 1\n").unwrap();
    let out_g = dir.path().join("gadget.g");
    let (code, v) = json(&["reduce", "--file", path(&f), "--with-matching", "-o", path(&out_g)]);
    assert_eq!(code, 0);
    assert_eq!(v["k"], 10);
    assert_eq!(v["matching"], serde_json::json!([0, 4, 6]));
    assert!(out_g.exists());
    let (code, v) = json(&["reduce", "--n", "2", "--triples", "0,0,0;1,1,0", "--with-matching"]);
    assert_eq!(code, 1);
    assert_eq!(v["matching"], Value::Null);
}

#[test]
fn outputs_are_deterministic() {
    let a = drs(&["gen", "random-connected", "--n", "7", "--extra", "4", "--seed", "9"]).stdout;
    let b = drs(&["gen", "random-connected", "--n", "7", "--extra", "4", "--seed", "9"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn single_vertex_warns() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("one.g");
    std::fs::write(&g, "g 1 0\n").unwrap();
    let out = drs(&["verify", path(&g), "--set", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}
