use std::path::PathBuf;
use std::process::Command;

use exactpart::cli::run_with;
use exactpart::setsys::{write_dimacs, Graph};
use serde_json::Value;

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("exactpart-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn graph_file(name: &str, g: &Graph) -> PathBuf {
    scratch(name, &write_dimacs(g))
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("exactpart").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.lines().next().unwrap()).unwrap()
}

#[test]
fn color() {
    let p = graph_file("petersen.col", &Graph::petersen());
    let (code, out) = run(&["color", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["trace"]["cases"].as_array().unwrap().len(), 4);

    let p = graph_file("k1.col", &Graph::empty(1).unwrap());
    assert_eq!(json(&run(&["color", p.to_str().unwrap()]).1)["chi"], 1);

    let bad = scratch("bad.col", "p edge x\n");
    assert_eq!(run(&["color", bad.to_str().unwrap()]).0, 2);
    let big = graph_file("big.col", &Graph::empty(21).unwrap());
    assert_eq!(run(&["color", big.to_str().unwrap()]).0, 3);
    assert_eq!(run(&["color", "/nonexistent/graph.col"]).0, 2);
}

#[test]
fn solve() {
    let p = graph_file("triangle.col", &Graph::complete(3).unwrap());
    let path = p.to_str().unwrap();
    let sat = |k: &str| json(&run(&["solve", path, "--kind", "partition", "--k", k]).1)["sat"].clone();
    assert_eq!(sat("3"), true);
    assert_eq!(sat("2"), false);

    let (code, out) = run(&["solve", path, "--kind", "cover", "--k", "3", "--strategy", "third", "--alpha", "0.2", "--witness"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
    assert_eq!(v["alpha"], "1/5");

    let sys = scratch("sys.json", r#"{"n": 4, "sets": [[0, 1], [1, 2], [2, 3], [0]]}"#);
    let s = sys.to_str().unwrap();
    let sat = |kind: &str, k: &str| json(&run(&["solve", s, "--kind", kind, "--k", k]).1)["sat"].clone();
    assert_eq!(sat("cover", "2"), true);
    assert_eq!(sat("partition", "2"), true);
    assert_eq!(sat("cover", "1"), false);

    assert_eq!(run(&["solve", path, "--kind", "cover", "--k", "2", "--strategy", "dde", "--alpha", "0.2"]).0, 2);
    assert_eq!(run(&["solve", path, "--kind", "bogus", "--k", "2"]).0, 2);
}

#[test]
fn enumerate() {
    let p = graph_file("triangle.col", &Graph::complete(3).unwrap());
    let (code, out) = run(&["enum", "mis", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(json(lines[3])["stats"]["distinct_outputs"], 3);

    let (_, out) = run(&["enum", "minimal-covers", p.to_str().unwrap()]);
    assert_eq!(out.lines().count(), 4);

    let empty = scratch("empty.json", r#"{"n": 3, "sets": []}"#);
    let (code, out) = run(&["enum", "minimal-covers", empty.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(json(&out)["stats"].is_object());
}

#[test]
fn cost_table() {
    let (code, out) = run(&["cost-table", "--cmin", "1.0", "--cmax", "1.1", "--step", "0.01"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("c,alpha_star"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!((first[1].parse::<f64>().unwrap() - 0.236159).abs() < 1e-5);
    assert!((first[5].parse::<f64>().unwrap() - 1.7274).abs() < 1e-4);
    assert_eq!(out.lines().count(), 12);

    let (_, out) = run(&["cost-table", "--c", "1.4423"]);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert!((row[5].parse::<f64>().unwrap() - 1.8554).abs() < 1e-3);

    assert_eq!(run(&["cost-table", "--cmin", "2", "--cmax", "1"]).0, 2);

    let dat = std::env::temp_dir().join(format!("exactpart-cli-{}-smallc.dat", std::process::id()));
    let (code, _) = run(&["cost-table", "--cmax", "1.2", "--dat", dat.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&dat).unwrap().lines().count(), 22);
}

#[test]
fn domatic() {
    for (name, g, want) in [
        ("k4.col", Graph::complete(4).unwrap(), 4),
        ("c4.col", Graph::cycle(4).unwrap(), 2),
        ("one.col", Graph::empty(1).unwrap(), 1),
    ] {
        let p = graph_file(name, &g);
        assert_eq!(json(&run(&["domatic", p.to_str().unwrap()]).1)["domatic"], want);
    }
}

#[test]
fn output_is_deterministic() {
    let p = graph_file("petersen2.col", &Graph::petersen());
    let a = run(&["color", p.to_str().unwrap()]).1;
    let b = run(&["color", p.to_str().unwrap()]).1;
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_exactpart");
    let p = graph_file("c5.col", &Graph::cycle(5).unwrap());
    let out = Command::new(bin).args(["color", p.to_str().unwrap()]).env("EXACTPART_THREADS", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&String::from_utf8(out.stdout).unwrap())["chi"], 3);
    let out = Command::new(bin).args(["cost-table", "--cmin", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["color", p.to_str().unwrap()]).env("EXACTPART_THREADS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
