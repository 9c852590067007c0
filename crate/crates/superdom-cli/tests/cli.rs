//! End-to-end checks of the binary: exit codes, formats, determinism.

use std::io::Write;
use std::process::{Command, Stdio};

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const K3: &str = "3 3\n0 1\n0 2\n1 2\n";
const C10: &str = "10 10\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n0 9\n";

fn run(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_superdom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    (
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
        output.status.code().unwrap(),
    )
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn usage_errors_exit_sixty_four() {
    assert_eq!(run(&[], "").2, 64);
    assert_eq!(run(&["compute", "gamma-sp", "--zzz"], "").2, 64);
    let (_, err, code) = run(&["compute", "gamma-sp"], "garbage\n");
    assert_eq!(code, 64);
    assert!(err.contains("header"));
    assert_eq!(run(&["reduce", "sat"], "not a cnf\n").2, 64);
    assert_eq!(run(&["verify", "--set", "0,x"], P4).2, 64);
}

#[test]
fn gamma_sp_reports_value_or_bounds() {
    let (out, _, code) = run(&["compute", "gamma-sp"], P4);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["status"], "exact");
    assert_eq!(doc["value"], 2);
    assert_eq!(doc["instance"]["n"], 4);
    let (out, _, code) = run(&["compute", "gamma-sp", "--budget", "1"], C10);
    assert_eq!(code, 2);
    let doc = json(&out);
    assert_eq!(doc["status"], "incomplete");
    assert!(doc.get("value").is_none());
    assert!(doc["lower"].as_u64().unwrap() <= doc["upper"].as_u64().unwrap());
}

#[test]
fn verify_accepts_and_refuses_with_the_failing_vertex() {
    let (out, _, code) = run(&["verify", "--set", "1,2"], P4);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], 2);
    let (out, _, code) = run(&["verify", "--set", "0,1"], P4);
    assert_eq!(code, 1);
    let doc = json(&out);
    assert_eq!(doc["status"], "refused");
    assert!(doc["refusal"].as_str().unwrap().contains("vertex 3"));
}

#[test]
fn emitted_certificates_reverify_through_verify() {
    let (out, _, code) = run(&["compute", "gamma-sp", "--cert", "--canonical"], C10);
    assert_eq!(code, 0);
    let doc = json(&out);
    let ids: Vec<String> = doc["certificate"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let set = ids.join(",");
    let (out, _, code) = run(&["verify", "--set", &set], C10);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], doc["value"]);
}

#[test]
fn subdivision_states_the_formula_it_used() {
    let (out, _, code) = run(&["compute", "subdivision", "--k", "3", "--cert"], K3);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["value"], 6);
    assert!(doc["provenance"].as_str().unwrap().contains("k % 4 == 3"));
    assert_eq!(doc["certificate"].as_array().unwrap().len(), 6);
    let (out, _, code) = run(&["compute", "subdivision", "--k", "2"], P4);
    assert_eq!(code, 0);
    assert!(json(&out)["provenance"]
        .as_str()
        .unwrap()
        .contains("k % 4 == 2"));
}

#[test]
fn tree_solver_accepts_forests_and_refuses_cycles() {
    let (out, _, code) = run(&["compute", "tree"], "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["value"], 3);
    assert!(doc["provenance"].as_str().unwrap().contains("n - matching"));
    let (out, _, code) = run(&["compute", "tree"], K3);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "refused");
}

#[test]
fn ii_and_bounds_report_their_numbers() {
    let (out, _, code) = run(
        &["compute", "ii", "--cert"],
        "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n",
    );
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["value"], 2);
    assert_eq!(doc["first_matching"].as_array().unwrap().len(), 1);
    let (out, _, code) = run(
        &["compute", "bounds", "--format", "tsv"],
        "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n",
    );
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let row: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(col("lower"), "3");
    assert_eq!(col("upper"), "4");
    assert_eq!(col("status"), "incomplete");
}

#[test]
fn reduce_embeds_or_writes_artifacts() {
    let (out, _, code) = run(&["reduce", "sat"], "p cnf 1 1\n1 1 1 0\n");
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["threshold"], 8);
    assert_eq!(doc["tree_shaped"], false);
    let roles = doc["roles"].as_str().unwrap();
    assert!(roles.contains("x1-") && roles.contains("v*"));
    assert!(doc["edge_list"].as_str().unwrap().starts_with("14 15\n"));

    let prefix = std::env::temp_dir().join("superdom-cli-alpha-test");
    let prefix = prefix.to_str().unwrap();
    let (out, _, code) = run(&["reduce", "alpha", "--k", "2", "--out", prefix], P4);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["threshold"], 4);
    assert!(doc.get("edge_list").is_none());
    let edge_list = std::fs::read_to_string(format!("{prefix}.el")).unwrap();
    assert!(edge_list.starts_with("16 72\n"));
    let roles = std::fs::read_to_string(format!("{prefix}.roles")).unwrap();
    assert!(roles.starts_with("0 (0,1)\n"));
    std::fs::remove_file(format!("{prefix}.el")).unwrap();
    std::fs::remove_file(format!("{prefix}.roles")).unwrap();
}

#[test]
fn canonical_runs_are_byte_identical() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["compute", "gamma-sp", "--canonical", "--cert"], C10),
        (vec!["compute", "ii", "--canonical", "--cert"], C10),
        (
            vec!["compute", "subdivision", "--k", "2", "--canonical", "--cert"],
            K3,
        ),
        (vec!["compute", "bounds", "--canonical"], P4),
        (vec!["verify", "--set", "1,2", "--canonical", "--cert"], P4),
        (vec!["reduce", "sat", "--canonical"], "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"),
        (vec!["reduce", "alpha", "--k", "1", "--canonical"], K3),
        (vec!["bench", "--canonical", "--format", "tsv"], ""),
    ];
    for (args, stdin) in cases {
        let (first, _, code_first) = run(&args, stdin);
        let (second, _, code_second) = run(&args, stdin);
        assert_eq!(code_first, code_second, "{args:?}");
        assert_eq!(first, second, "{args:?}");
        assert!(!first.contains("elapsed_ms"), "{args:?}");
    }
}

#[test]
fn selftest_passes_and_prints_one_line_per_criterion() {
    let args = ["selftest", "--canonical", "--format", "tsv"];
    let (first, _, code) = run(&args, "");
    assert_eq!(code, 0);
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 8);
    for line in &lines {
        assert!(line.starts_with("criterion "));
        assert!(line.contains(": pass ("));
    }
    let (second, _, code) = run(&args, "");
    assert_eq!(code, 0);
    assert_eq!(first, second);
}
