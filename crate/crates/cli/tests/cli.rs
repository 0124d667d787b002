//! End-to-end tests driving the compiled binary: command surface, output
//! formats, determinism, and the exit-code contract (0 ok, 1 usage,
//! 2 guard refusal).

use std::process::{Command, Output};

use serde_json::Value;

fn bentgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bentgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = bentgraph(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_json(args: &[&str]) -> Value {
    serde_json::from_str(&run_ok(args)).expect("valid JSON output")
}

fn exit_code(args: &[&str]) -> i32 {
    bentgraph(args).status.code().expect("no signal")
}

#[test]
fn analyze_and_function() {
    let report = run_json(&["analyze", "b:0001"]);
    assert_eq!(report["function_id"], "b:0001");
    assert_eq!(report["n"], 2);
    assert_eq!(report["support_size"], 1);
    assert_eq!(report["nonlinearity"], 1);
    assert_eq!(report["is_bent"], true);
    assert_eq!(report["components"], 2);
    let graph = &report["graph"];
    assert_eq!(graph["v"], 4);
    assert_eq!(graph["k"], 1);
    assert_eq!(graph["lambda"], 0);
    assert_eq!(graph["mu"], 0);
    assert_eq!(graph["lambda_eq_mu"], true);
}

#[test]
fn analyze_complete_graph_emits_discrepancy_warning() {
    let report = run_json(&["analyze", "b:0111"]);
    assert_eq!(report["graph"]["k"], 3);
    assert_eq!(report["graph"]["mu"], Value::Null);
    assert_eq!(report["graph"]["lambda_eq_mu"], true);
    let warnings = report["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w["kind"] == "paper_discrepancy"
        && w["message"].as_str().unwrap().contains("srg(4,3,1,1)")));
}

#[test]
fn analyze_anf_bent_function() {
    let report = run_json(&["analyze", "a:n=4: x1*x2 + x3*x4"]);
    assert_eq!(report["n"], 4);
    assert_eq!(report["support_size"], 6);
    assert_eq!(report["is_bent"], true);
    assert_eq!(report["graph"]["v"], 16);
    assert_eq!(report["graph"]["k"], 6);
    assert_eq!(report["graph"]["lambda"], 2);
    assert_eq!(report["graph"]["mu"], 2);
    let warnings = report["warnings"].as_array().unwrap();
    assert!(warnings
        .iter()
        .any(|w| w["message"].as_str().unwrap().contains("srg(16,10,2,2)")));
}

#[test]
fn analyze_odd_arity_reports_reason() {
    let report = run_json(&["analyze", "b:01"]);
    assert_eq!(report["is_bent"], false);
    assert_eq!(report["bent_reason"], "arity must be even");
}

#[test]
fn analyze_loop_warning() {
    let report = run_json(&["analyze", "b:1001"]);
    assert!(report["warnings"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w["kind"] == "loops"));
}

#[test]
fn analyze_csv_spectrum() {
    let csv = run_ok(&["analyze", "b:0001", "--format", "csv"]);
    assert_eq!(
        csv,
        "index,i_bits,lambda_i\n0,00,1\n1,01,-1\n2,10,-1\n3,11,1\n"
    );
}

#[test]
fn analyze_json_is_deterministic() {
    let a = run_ok(&["analyze", "h:0356"]);
    let b = run_ok(&["analyze", "h:0356"]);
    assert_eq!(a, b);
}

#[test]
fn graph_dot_export() {
    let dot = run_ok(&["graph", "b:0001"]);
    assert_eq!(
        dot,
        "graph cayley {\n  \"00\";\n  \"01\";\n  \"10\";\n  \"11\";\n  \"00\" -- \"11\";\n  \"01\" -- \"10\";\n}\n"
    );
}

#[test]
fn graph_dot_loops_as_self_edges() {
    let dot = run_ok(&["graph", "b:1001"]);
    assert!(dot.contains("\"00\" -- \"00\";"));
    assert!(dot.contains("\"01\" -- \"01\";"));
}

#[test]
fn predict_n8_families() {
    let report = run_json(&["predict", "--n", "8"]);
    assert_eq!(report["plus"]["v"], 256);
    assert_eq!(report["plus"]["k"], 136);
    assert_eq!(report["plus"]["lambda"], 72);
    assert_eq!(report["plus"]["mu"], 72);
    assert_eq!(report["minus"]["k"], 120);
    assert_eq!(report["minus"]["mu"], 56);
}

#[test]
fn predict_small_arities_flag_published_discrepancies() {
    let n2 = run_json(&["predict", "--n", "2"]);
    let warnings = n2["warnings"].as_array().unwrap();
    assert!(warnings
        .iter()
        .any(|w| w["message"].as_str().unwrap().contains("srg(4,3,1,1)")));

    let n4 = run_json(&["predict", "--n", "4"]);
    let warnings = n4["warnings"].as_array().unwrap();
    assert!(warnings
        .iter()
        .any(|w| w["message"].as_str().unwrap().contains("srg(16,10,2,2)")));
}

#[test]
fn predict_rejects_odd_arity() {
    assert_eq!(exit_code(&["predict", "--n", "7"]), 1);
}

#[test]
fn enumerate_counts() {
    assert_eq!(run_json(&["enumerate", "--n", "2"])["count"], 8);
    assert_eq!(run_json(&["enumerate", "--n", "4"])["count"], 896);
}

#[test]
fn enumerate_csv_listing() {
    let csv = run_ok(&["enumerate", "--n", "2", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "index,truth_table_hex,support_size");
    assert_eq!(lines.len(), 9);
    assert!(lines[1..]
        .iter()
        .all(|l| l.ends_with(",1") || l.ends_with(",3")));
}

#[test]
fn enumerate_above_range_is_guard_refusal() {
    assert_eq!(exit_code(&["enumerate", "--n", "6"]), 2);
}

#[test]
fn vectorial_nyberg_components() {
    // The two components of the n=4 field-multiplication construction.
    let report = run_json(&["vectorial", "h:0365", "h:0536"]);
    assert_eq!(report["n"], 4);
    assert_eq!(report["m"], 2);
    assert_eq!(report["is_vectorial_bent"], true);
    assert_eq!(report["witness"], Value::Null);
    assert_eq!(report["min_combination_nonlinearity"], 6);
    let subsets = report["subsets"].as_array().unwrap();
    assert_eq!(subsets.len(), 3);
    for s in subsets {
        assert_eq!(s["lambda_eq_mu"], true);
        assert_eq!(s["supports_match"], true);
        let k = s["srg"]["k"].as_u64().unwrap();
        assert!(k == 6 || k == 10);
    }
}

#[test]
fn vectorial_arity_mismatch_is_usage_error() {
    assert_eq!(exit_code(&["vectorial", "b:0001", "b:01"]), 1);
}

#[test]
fn generate_random_is_deterministic() {
    let a = run_ok(&["generate", "random", "--n", "6", "--seed", "11"]);
    let b = run_ok(&["generate", "random", "--n", "6", "--seed", "11"]);
    assert_eq!(a, b);
    let c = run_ok(&["generate", "random", "--n", "6", "--seed", "12"]);
    assert_ne!(a, c);
}

#[test]
fn generate_mm_is_bent_and_analyzable() {
    let generated = run_json(&["generate", "mm", "--n", "8", "--seed", "3"]);
    assert_eq!(generated["is_bent"], true);
    let id = generated["function_id"].as_str().unwrap();
    let report = run_json(&["analyze", id]);
    assert_eq!(report["is_bent"], true);
    assert_eq!(report["graph"]["lambda_eq_mu"], true);
}

#[test]
fn generate_nyberg_components_are_bent() {
    let generated = run_json(&["generate", "nyberg", "--n", "6"]);
    assert_eq!(generated["m"], 3);
    assert_eq!(generated["is_vectorial_bent"], true);
    assert_eq!(generated["components"].as_array().unwrap().len(), 3);
}

#[test]
fn parse_errors_exit_one() {
    assert_eq!(exit_code(&["analyze", "b:01a1"]), 1);
    assert_eq!(exit_code(&["analyze", "t:0011"]), 1);
    assert_eq!(exit_code(&["analyze", "a:n=2: x9"]), 1);
    assert_eq!(exit_code(&["nonsense"]), 1);
}

#[test]
fn lowered_limit_is_guard_refusal() {
    assert_eq!(exit_code(&["analyze", "h:0356", "--limit", "3"]), 2);
    assert_eq!(exit_code(&["graph", "h:0356", "--limit", "3"]), 2);
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join("bentgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let stdout = run_ok(&["analyze", "b:0001"]);
    run_ok(&["analyze", "b:0001", "--out", path.to_str().unwrap()]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stdout, written);
    std::fs::remove_file(&path).ok();
}
