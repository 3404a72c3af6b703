use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn svpq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svpq")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let p = path(dir, name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    assert!(svpq(&full).status.success());
    p
}

#[test]
fn gen_is_deterministic_and_parses() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", &["scaled-identity", "--n", "3", "--scale", "7"]);
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, "3\n7 0 0\n0 7 0\n0 0 7\n");
    let u1 = gen(dir.path(), "u1.txt", &["uniform", "--n", "5", "--seed", "4"]);
    let u2 = gen(dir.path(), "u2.txt", &["uniform", "--n", "5", "--seed", "4"]);
    assert_eq!(fs::read(u1).unwrap(), fs::read(u2).unwrap());
}

#[test]
fn bruteforce_on_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let b = gen(dir.path(), "d.txt", &["scaled-identity", "--n", "3", "--scale", "7"]);
    let out = svpq(&["svp", &b, "--mode", "bruteforce", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["norm_sq"], 49);
}

#[test]
fn modes_agree_on_uniform_instance() {
    let dir = tempfile::tempdir().unwrap();
    let b = gen(dir.path(), "u.txt", &["uniform", "--n", "5", "--seed", "1"]);
    let norms: Vec<Value> = ["bruteforce", "enump", "qsim"]
        .iter()
        .map(|m| json_of(&svpq(&["svp", &b, "--mode", m, "--seed", "1", "--json"]))["norm_sq"].clone())
        .collect();
    assert_eq!(norms[0], norms[1]);
    assert_eq!(norms[0], norms[2]);
}

#[test]
fn qsim_ledger_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let b = gen(dir.path(), "u.txt", &["uniform", "--n", "4", "--seed", "2"]);
    let run = || json_of(&svpq(&["svp", &b, "--mode", "qsim", "--kappa", "10", "--seed", "3", "--json"]));
    let (x, y) = (run(), run());
    let l = &x["ledger"];
    assert_eq!(l["ubddp_calls"].as_u64().unwrap(), 2 * l["od_queries"].as_u64().unwrap());
    for key in ["vector", "norm_sq", "fingerprint", "stats", "qenum_calls"] {
        assert_eq!(x[key], y[key], "{key}");
    }
    assert_eq!(x["ledger"]["od_queries"], y["ledger"]["od_queries"]);
}

#[test]
fn bdd_decodes() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = path(dir.path(), "z2.txt");
    fs::write(&z2, "2\n1 0\n0 1\n").unwrap();
    let v = json_of(&svpq(&["bdd", &z2, "--target", "0.1,-0.2", "--json"]));
    assert_eq!(v["vector"], serde_json::json!([0, 0]));
    let v = json_of(&svpq(&["bdd", &z2, "--target", "3,-5", "--json"]));
    assert_eq!(v["vector"], serde_json::json!([3, -5]));
}

#[test]
fn preprocess_then_query() {
    let dir = tempfile::tempdir().unwrap();
    let b = gen(dir.path(), "u.txt", &["uniform", "--n", "3", "--seed", "5"]);
    let adv = path(dir.path(), "advice.json");
    assert!(svpq(&["preprocess", &b, "--seed", "2", "--out", &adv]).status.success());
    let stored = json_of(&svpq(&["bdd", &b, "--target", "10.5,-3.25,7", "--advice", &adv, "--json"]));
    let fresh = json_of(&svpq(&["bdd", &b, "--target", "10.5,-3.25,7", "--seed", "2", "--json"]));
    assert_eq!(stored["vector"], fresh["vector"]);
    let other = gen(dir.path(), "o.txt", &["uniform", "--n", "3", "--seed", "6"]);
    assert_eq!(svpq(&["bdd", &other, "--target", "0,0,0", "--advice", &adv]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.txt");
    fs::write(&bad, "2\n1 0\n0 x\n").unwrap();
    let out = svpq(&["svp", &bad, "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["status"], "error");
    assert!(v["message"].as_str().unwrap().contains("line 3"));

    let big = gen(dir.path(), "big.txt", &["scaled-identity", "--n", "11", "--scale", "2"]);
    assert_eq!(svpq(&["svp", &big, "--mode", "bruteforce"]).status.code(), Some(4));

    let z = path(dir.path(), "z.txt");
    fs::write(&z, "2\n1 0\n0 1\n").unwrap();
    assert_eq!(svpq(&["bdd", &z, "--target", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn bench_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = path(dir.path(), "bench.csv");
    let out = svpq(&["bench", "--n-min", "4", "--n-max", "6", "--trials", "5", "--modes", "bruteforce", "--out", &csv_path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut r = csv::Reader::from_path(&csv_path).unwrap();
    let headers = r.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["n", "trial", "mode", "norm_ok", "od_queries", "toffoli_estimate", "wall_ms"]
    );
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|row| &row[3] == "true"));
}
