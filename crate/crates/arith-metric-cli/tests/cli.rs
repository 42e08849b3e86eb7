//! End-to-end tests of the binary: output bytes and exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arith-metric"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn corpus() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/corpus-12.txt")
}

#[test]
fn dist_plain() {
    let out = run(&["dist", "11", "12"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "4\n");

    let out = run(&["dist", "7", "7"]);
    assert_eq!(stdout_of(&out), "0\n");
}

#[test]
fn dist_json_envelope_is_minified_and_stable() {
    let out = run(&["dist", "11", "12", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "{\"command\":\"dist\",\"input\":{\"a\":11,\"b\":12},\"result\":4}\n"
    );
}

#[test]
fn pretty_json_is_opt_in() {
    let out = run(&["dist", "11", "12", "--format", "json", "--pretty"]);
    let text = stdout_of(&out);
    assert!(text.contains("\n  \"command\": \"dist\""), "got: {text}");
}

#[test]
fn dist_rejects_zero_with_exit_1() {
    let out = run(&["dist", "0", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn factor_formats() {
    let out = run(&["factor", "360"]);
    assert_eq!(stdout_of(&out), "2^3 * 3^2 * 5\n");

    let out = run(&["factor", "1"]);
    assert_eq!(stdout_of(&out), "1\n");

    let out = run(&["factor", "360", "--format", "json"]);
    assert_eq!(
        stdout_of(&out),
        "{\"command\":\"factor\",\"input\":{\"n\":360},\"result\":[[2,3],[3,2],[5,1]]}\n"
    );

    let out = run(&["factor", "12", "--format", "csv"]);
    assert_eq!(stdout_of(&out), "prime,exponent\n2,2\n3,1\n");
}

#[test]
fn omega_and_xi() {
    assert_eq!(stdout_of(&run(&["omega", "360"])), "6\n");
    assert_eq!(stdout_of(&run(&["xi", "2", "12"])), "3\n");
    assert_eq!(stdout_of(&run(&["xi", "3", "12"])), "2\n");
    let out = run(&["xi", "1", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ball_output() {
    let out = run(&["ball", "6", "2", "--max", "12"]);
    assert_eq!(stdout_of(&out), "1 2 3 4 6 9 10 12\n");

    let out = run(&["ball", "1", "1", "--max", "100", "--format", "json"]);
    let envelope: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(envelope["command"], "ball");
    assert_eq!(envelope["result"].as_array().unwrap().len(), 26);

    let out = run(&["ball", "6", "1", "--max", "12", "--format", "csv"]);
    assert_eq!(stdout_of(&out), "2\n3\n6\n12\n");
}

#[test]
fn diameter_formula_and_brute() {
    assert_eq!(stdout_of(&run(&["diameter", "12"])), "5\n");
    assert_eq!(stdout_of(&run(&["diameter", "12", "--brute"])), "5 (8, 9)\n");

    let out = run(&["diameter", "100", "--brute", "--format", "json"]);
    let envelope: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(envelope["result"]["diameter"], 10);
    assert_eq!(envelope["result"]["witness"][0], 64);
    assert_eq!(envelope["result"]["witness"][1], 81);

    // beyond the quadratic-scan cap
    let out = run(&["diameter", "3000", "--brute"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hasse_summary_and_dot() {
    let out = run(&["hasse", "12"]);
    assert_eq!(stdout_of(&out), "12 vertices, 14 edges\n");

    let out = run(&["hasse", "12", "--dot"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("graph hasse_12 {\n"));
    assert!(text.ends_with("}\n"));
    assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 14);
    assert!(!text.contains("  11 -- 12\n"));
    assert!(text.contains("  1 -- 11\n"));

    let out = run(&["hasse", "4", "--format", "dot"]);
    let text = stdout_of(&out);
    let edges: Vec<&str> = text.lines().filter(|l| l.contains("--")).collect();
    assert_eq!(edges, vec!["  1 -- 2", "  1 -- 3", "  2 -- 4"]);

    let out = run(&["hasse", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn census_csv_shape() {
    let out = run(&["census", "100", "--kmax", "2", "--format", "csv"]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,count,estimate,ratio");
    assert_eq!(lines[1], "0,1,,");
    assert!(lines[2].starts_with("1,25,"), "got {}", lines[2]);
    assert!(lines[3].starts_with("2,34,"), "got {}", lines[3]);
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l.matches(',').count() == 3));
    assert!(!text.contains('\r'));
}

#[test]
fn census_respects_sieve_limit_with_exit_2() {
    let out = run(&["census", "100", "--sieve-limit", "50"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .env("ARITH_METRIC_SIEVE_LIMIT", "50")
        .args(["census", "100"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ext_dist_literals() {
    assert_eq!(
        stdout_of(&run(&["ext-dist", "root(2, 2)", "root(3, 2)"])),
        "1/6\n"
    );
    assert_eq!(stdout_of(&run(&["ext-dist", "1/2", "3"])), "2\n");
    assert_eq!(stdout_of(&run(&["ext-dist", "6/6", "1"])), "0\n");

    let out = run(&["ext-dist", "root(0, 2)", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["ext-dist", "2/0", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nn_and_range_over_corpus_file() {
    let out = run(&["nn", "7", "2", "--corpus", corpus()]);
    assert_eq!(stdout_of(&out), "7 0\n1 1\n");

    let out = run(&["nn", "8", "3", "--corpus", corpus(), "--format", "csv"]);
    assert_eq!(stdout_of(&out), "value,distance\n8,0\n4,1\n2,2\n");

    let out = run(&["range", "6", "2", "--corpus", corpus()]);
    assert_eq!(stdout_of(&out), "1 2 3 4 6 9 10 12\n");

    let out = run(&["range", "11", "1", "--corpus", corpus(), "--format", "json"]);
    let envelope: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(envelope["result"], serde_json::json!([1, 11]));

    let out = run(&["nn", "7", "2", "--corpus", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_single_suite_passes() {
    let out = run(&["verify", "--suite", "metric-axioms", "--seed", "7"]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("ok   metric-axioms:"), "got: {text}");
    assert!(text.contains("1/1 suites passed"), "got: {text}");

    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = stdout_of(&run(&["census", "1000", "--kmax", "4", "--format", "json"]));
    let b = stdout_of(&run(&["census", "1000", "--kmax", "4", "--format", "json"]));
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn format_mismatches_are_invalid() {
    let out = run(&["dist", "3", "4", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1_help_exits_0() {
    let out = run(&["frobnicate", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["dist", "11"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("arith-metric"));
}
