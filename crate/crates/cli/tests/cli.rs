use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn graphoids(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphoids"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn named(dir: &TempDir, example: &str) -> PathBuf {
    let out = graphoids(&["dist", "gen", "--kind", &format!("named-example:{example}")]);
    assert_eq!(out.status.code(), Some(0));
    write(
        dir,
        &format!("{example}.json"),
        std::str::from_utf8(&out.stdout).unwrap(),
    )
}

const M1: &str = r#"{"variables":["a","b","c","d"],"statements":[{"X":["a","b"],"Y":["c","d"],"Z":[]}]}"#;

#[test]
fn pair_analysis_of_two_block_model() {
    let dir = TempDir::new().unwrap();
    let m1 = write(&dir, "m1.json", M1);
    let out = graphoids(&["analyze", "pair", "--model", s(&m1), "--a", "a", "--b", "c"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["totally_independent"], true);
    assert_eq!(v["totally_uncoupled"], true);
    assert_eq!(v["totally_disconnected"], true);
    assert_eq!(v["witness"]["U1"], serde_json::json!(["a", "b"]));
    assert_eq!(v["witness"]["U2"], serde_json::json!(["c", "d"]));
}

#[test]
fn parity_network_as_dot() {
    let dir = TempDir::new().unwrap();
    let parity = named(&dir, "parity");
    let out = graphoids(&["bn", "build", "--dist", s(&parity), "--order", "a,b,c", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    let edges: Vec<&str> = dot.lines().map(str::trim).filter(|l| l.contains("->")).collect();
    assert_eq!(edges, ["a -> c;", "b -> c;"]);
}

#[test]
fn parity_conditional_dependence_exits_one() {
    let dir = TempDir::new().unwrap();
    let parity = named(&dir, "parity");
    let out = graphoids(&[
        "dist",
        "indep",
        "--dist",
        s(&parity),
        "--x",
        "a",
        "--y",
        "b",
        "--z",
        "c",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["independent"], false);

    let out = graphoids(&["dist", "indep", "--dist", s(&parity), "--x", "a", "--y", "b"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["independent"], true);
}

#[test]
fn value_level_query_on_pair_copy() {
    let dir = TempDir::new().unwrap();
    let pc = named(&dir, "pair-copy");
    let out = graphoids(&[
        "dist",
        "indep",
        "--dist",
        s(&pc),
        "--x",
        "a",
        "--y",
        "b",
        "--z",
        "c",
        "--at",
        "c=(1,0)",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn pair_copy_is_not_transitive() {
    let dir = TempDir::new().unwrap();
    let pc = named(&dir, "pair-copy");
    let out = graphoids(&["analyze", "transitivity", "--dist", s(&pc)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["counterexample"], serde_json::json!(["a", "c", "b"]));

    let out = graphoids(&["analyze", "separability", "--dist", s(&pc)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["separable"], false);
}

#[test]
fn closure_and_closedness() {
    let dir = TempDir::new().unwrap();
    let m1 = write(&dir, "m1.json", M1);
    let out = graphoids(&["model", "check", "--model", s(&m1)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["violation"]["axiom"], "decomposition");

    let out = graphoids(&["model", "close", "--model", s(&m1)]);
    assert_eq!(out.status.code(), Some(0));
    let closed = write(&dir, "closed.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = graphoids(&["model", "check", "--model", s(&closed)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn components_and_dsep_of_saved_network() {
    let dir = TempDir::new().unwrap();
    let m1 = write(&dir, "m1.json", M1);
    let out = graphoids(&["bn", "build", "--model", s(&m1), "--order", "a,b,c,d"]);
    assert_eq!(out.status.code(), Some(0));
    let net = write(&dir, "net.json", std::str::from_utf8(&out.stdout).unwrap());

    let out = graphoids(&["bn", "components", "--net", s(&net)]);
    assert_eq!(
        stdout_json(&out)["components"],
        serde_json::json!([["a", "b"], ["c", "d"]])
    );

    let out = graphoids(&["bn", "dsep", "--net", s(&net), "--x", "a", "--y", "b", "--trails"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["active_trails"], serde_json::json!(["a->b"]));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "experiment",
        "run",
        "--suite",
        "thm4",
        "--n",
        "4",
        "--trials",
        "3",
        "--seed",
        "7",
    ];
    let first = graphoids(&args);
    let second = graphoids(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let gen = [
        "dist",
        "gen",
        "--kind",
        "spb-block-product",
        "--n",
        "4",
        "--blocks",
        "a,b|c,d",
        "--seed",
        "9",
    ];
    assert_eq!(graphoids(&gen).stdout, graphoids(&gen).stdout);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let parity = named(&dir, "parity");
    let bad = write(&dir, "bad.json", "{not json");

    // unknown variable
    let out = graphoids(&["dist", "indep", "--dist", s(&parity), "--x", "q", "--y", "b"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed file
    assert_eq!(
        graphoids(&["model", "close", "--model", s(&bad)]).status.code(),
        Some(2)
    );
    // missing file
    assert_eq!(
        graphoids(&["bn", "dot", "--dist", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    // usage error
    assert_eq!(graphoids(&["bn", "frobnicate"]).status.code(), Some(2));
    // non-permutation ordering
    let out = graphoids(&["bn", "build", "--dist", s(&parity), "--order", "a,a,c"]);
    assert_eq!(out.status.code(), Some(2));
    // zero cells without the explore flag
    assert_eq!(
        graphoids(&["axiom", "proptrans", "--dist", s(&parity)]).status.code(),
        Some(2)
    );
}

#[test]
fn proptrans_on_parity_when_explicitly_allowed() {
    let dir = TempDir::new().unwrap();
    let parity = named(&dir, "parity");
    let out = graphoids(&["axiom", "proptrans", "--dist", s(&parity), "--explore-nonpositive"]);
    let v = stdout_json(&out);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    let code = if v["pass"] == true { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(code));
}

#[test]
fn gaussian_unification_holds() {
    let dir = TempDir::new().unwrap();
    let out = graphoids(&["dist", "gen", "--kind", "gaussian-random", "--n", "4", "--seed", "5"]);
    let g = write(&dir, "g.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = graphoids(&["axiom", "unification", "--dist", s(&g), "--grid=-1,0,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["max_deviation"], 0.0);
}

#[test]
fn simnet_compose_and_validate() {
    let dir = TempDir::new().unwrap();
    // h over three values, s1 marks h3, s2 is independent noise
    let mut cells = Vec::new();
    for (hi, h) in ["h1", "h2", "h3"].iter().enumerate() {
        for s1 in 0..2 {
            for s2 in 0..2 {
                let w1 = if (hi == 2) == (s1 == 1) { 3 } else { 1 };
                let w2 = 1 + s2;
                cells.push(format!(
                    r#"{{"assign":{{"h":"{h}","s1":"{s1}","s2":"{s2}"}},"p":"{}/{}"}}"#,
                    w1 * w2,
                    3 * 4 * 3
                ));
            }
        }
    }
    let dist = format!(
        r#"{{"type":"tabular","variables":[{{"name":"h","domain":["h1","h2","h3"]}},{{"name":"s1","domain":["0","1"]}},{{"name":"s2","domain":["0","1"]}}],"cells":[{}]}}"#,
        cells.join(",")
    );
    let dist = write(&dir, "dist.json", &dist);
    let graph = write(
        &dir,
        "graph.json",
        r#"{"hypothesis":"h","values":["h1","h2","h3"],"edges":[["h1","h2"],["h2","h3"]]}"#,
    );
    let out = graphoids(&["simnet", "validate", "--dist", s(&dist), "--graph", s(&graph)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = graphoids(&["simnet", "compose", "--dist", s(&dist), "--graph", s(&graph)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["global"]["edges"], serde_json::json!([["h", "s1"]]));

    let disconnected = write(
        &dir,
        "bad_graph.json",
        r#"{"hypothesis":"h","values":["h1","h2","h3"],"edges":[["h1","h2"]]}"#,
    );
    let out = graphoids(&["simnet", "validate", "--dist", s(&dist), "--graph", s(&disconnected)]);
    assert_eq!(out.status.code(), Some(2));
}
