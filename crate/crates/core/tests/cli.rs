use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cind"))
        .args(args)
        .env_remove("CIND_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Writes `gen` output for a family into a temp file with the given extension.
fn generated(name: &str, args: &[&str], ext: &str) -> PathBuf {
    let format = if ext == "g6" { "graph6" } else { "edgelist" };
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend(["--format", format]);
    let out = cind(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = std::env::temp_dir().join(format!("cind-cli-{}-{name}.{ext}", std::process::id()));
    std::fs::write(&path, out.stdout).unwrap();
    path
}

#[test]
fn gen_necklace_is_graph6() {
    let out = cind(&["gen", "necklace", "8"]);
    assert!(out.status.success());
    let g = cind::graph::io::parse_graph6(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(g.order(), 32);
    assert!(g.is_cubic());
}

#[test]
fn exact_on_prism() {
    let p = generated("prism", &["fixture", "prism"], "el");
    let out = cind(&["exact", p.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["size"], 4);
    assert_eq!(v["optimal"], true);
    assert_eq!(v["operation"], "exact");
}

#[test]
fn verify_reports_offending_vertex() {
    let p = generated("k4", &["fixture", "k4"], "g6");
    let out = cind(&["verify", p.to_str().unwrap(), "--set", "0,1,2,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 0 has 3 neighbors"));
    let ok = cind(&["verify", p.to_str().unwrap(), "--set", "1,2,3"]);
    assert_eq!(json(&ok)["size"], 3);
}

#[test]
fn greedy_and_clawfree_payloads() {
    let p = generated("tight", &["tightness", "1"], "g6");
    let g = json(&cind(&["greedy", p.to_str().unwrap()]));
    assert!(g["size"].as_u64().unwrap() > 0);
    assert!(g["bound_denominator"].as_i64().unwrap() > 0);
    let c = json(&cind(&["clawfree", p.to_str().unwrap()]));
    assert_eq!(c["threshold"], 36);
    assert!(c["size"].as_u64().unwrap() >= 36);
    assert!(c["surgeries_applied"].as_u64().unwrap() > 0);
}

#[test]
fn reduce_writes_graph_and_sidecar() {
    let p = generated("k4r", &["fixture", "k4"], "el");
    let h = p.with_extension("h.g6");
    let out = cind(&["reduce", p.to_str().unwrap(), "--out", h.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["order"], 48);
    assert_eq!(v["max_degree"], 4);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 4);
    let text = std::fs::read_to_string(&h).unwrap();
    assert_eq!(
        cind::graph::io::parse_graph6(text.trim()).unwrap().order(),
        48
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cind(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cind(&["exact", "missing.txt"]).status.code(), Some(2));
    assert_eq!(cind(&["gen", "necklace"]).status.code(), Some(2));
    let p = generated("notcubic", &["bipartite", "4"], "g6");
    assert_eq!(
        cind(&["clawfree", p.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn seed_from_environment() {
    let with_env = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_cind"))
            .args(["gen", "cubic", "20"])
            .env("CIND_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    let flag = cind(&["gen", "cubic", "20", "--seed", "5"]).stdout;
    assert_eq!(with_env("5"), flag);
    assert_ne!(with_env("6"), flag);
}

#[test]
fn bench_single_suite() {
    let out = cind(&["bench", "--suite", "tightness", "--seed", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tightness  PASS"));
    assert_eq!(cind(&["bench", "--suite", "nope"]).status.code(), Some(2));
}
