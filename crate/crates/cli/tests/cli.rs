use std::process::{Command, Output};

use serde_json::Value;

fn jquartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jquartic"))
        .args(args)
        .env_remove("JQUARTIC_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn invariants_of_the_example_quartic() {
    let v = json(&jquartic(&["invariants", "1,0,-6,0,1"]));
    let r = &v["result"];
    assert_eq!((r["I"].as_i64(), r["J"].as_i64(), r["disc"].as_i64()), (Some(48), Some(0), Some(16384)));
    assert_eq!(v["header"]["command"], "invariants 1,0,-6,0,1");
    assert_eq!(v["header"]["config_hash"].as_str().map(str::len), Some(64));
}

#[test]
fn negative_leading_coefficient_parses() {
    let v = json(&jquartic(&["invariants", "-1,0,6,0,-1"]));
    assert_eq!(v["result"]["I"], 48);
}

#[test]
fn classgroup_23_has_three_classes() {
    let v = json(&jquartic(&["classgroup", "23"]));
    let r = &v["result"];
    assert_eq!(r["class_number"], 3);
    let forms: Vec<&Value> = r["classes"].as_array().unwrap().iter().map(|c| &c["form"]).collect();
    assert_eq!(forms, [&serde_json::json!([1, 1, 6]), &serde_json::json!([2, 1, 3]), &serde_json::json!([2, -1, 3])]);
    assert_eq!(r["composition"], serde_json::json!([[0, 1, 2], [1, 2, 0], [2, 0, 1]]));
}

#[test]
fn reduce_places_a_quartic() {
    let v = json(&jquartic(&["reduce", "1,0,-6,0,1"]));
    assert_eq!(v["result"]["divisor"], serde_json::json!([1, 0, 1]));
    let v = json(&jquartic(&["reduce", "3,5,7"]));
    assert_eq!(v["result"]["reduced"], serde_json::json!([3, -1, 5]));
}

#[test]
fn csv_carries_the_header() {
    let out = jquartic(&["family", "1,1,2", "--ibound", "1000", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let head = lines.next().unwrap();
    assert!(head.starts_with("# jquartic ") && head.contains("config_hash=") && head.contains("seed="));
    assert_eq!(lines.next(), Some("A,B,a4,a3,a2,a1,a0,I,primitive,irreducible,orbit_least,orbit_size"));
    assert_eq!(lines.count(), 28);
    let v = json(&jquartic(&["family", "1,1,2", "--ibound", "1000"]));
    assert!(head.contains(v["header"]["config_hash"].as_str().unwrap()));
}

#[test]
fn counts_are_byte_identical_across_runs_and_thread_counts() {
    let args = ["count-n", "--ladder", "1e4,1e6,1e7"];
    let a = jquartic(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_jquartic"))
        .args(args)
        .env("JQUARTIC_THREADS", "3")
        .output()
        .unwrap();
    let c = jquartic(&[&args[..], &["--threads", "1"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let v = json(&a);
    let run = &v["result"]["runs"][0];
    assert_eq!(run["policy"], "discriminant-leq");
    assert!(run["fitted"]["a"].is_f64());
    assert_eq!(run["ladder"].as_array().unwrap().len(), 3);
}

#[test]
fn seed_changes_the_hash_but_not_the_counts() {
    let a = json(&jquartic(&["count-m", "--ladder", "1e4,1e6", "--seed", "1"]));
    let b = json(&jquartic(&["count-m", "--ladder", "1e4,1e6", "--seed", "2"]));
    assert_ne!(a["header"]["config_hash"], b["header"]["config_hash"]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn count_m_skips_abs_i_above_the_limit() {
    let v = json(&jquartic(&["count-m", "--ladder", "1e3,1e6"]));
    let runs = v["result"]["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 2);
    assert_eq!(runs[1]["policy"], "abs-i-leq");
    assert_eq!(runs[1]["ladder"].as_array().unwrap().len(), 1);
    assert_eq!(v["result"]["notes"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_oracle_equivalence_passes() {
    let out = jquartic(&["verify", "oracle-equivalence", "--xmax", "20000"]);
    let v = json(&out);
    assert_eq!(v["result"]["pass"], true);
    assert_eq!(v["config"]["xmax"], 20000);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn config_file_and_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(&conf, "# test run\nseed = 9\nladder = 1e4, 1e5\n").unwrap();
    let out_dir = dir.path().join("out");
    let out = jquartic(&["count-n", "--config", conf.to_str().unwrap(), "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out_dir.join("count-n.json")).unwrap()).unwrap();
    assert_eq!(v["header"]["seed"], 9);
    assert_eq!(v["config"]["ladder"], serde_json::json!([10000, 100000]));
    let csv = std::fs::read_to_string(out_dir.join("count-n.csv")).unwrap();
    assert!(csv.lines().nth(1) == Some("policy,X,D,points,orbits"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&jquartic(&["invariants", "1,0,x"])), 2);
    assert_eq!(code(&jquartic(&["invariants", "1,2"])), 2);
    assert_eq!(code(&jquartic(&["count-n", "--ladder", "1e6,1e4"])), 2);
    assert_eq!(code(&jquartic(&["verify", "no-such-suite"])), 2);
    assert_eq!(code(&jquartic(&["classgroup", "21"])), 2);
    assert_eq!(code(&jquartic(&["count-m", "--policy", "abs-i-leq", "--ladder", "1e6"])), 3);
    assert_eq!(code(&jquartic(&["verify", "oracle-equivalence", "--xmax", "20000", "--height", "5"])), 3);
}
