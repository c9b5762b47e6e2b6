use std::process::Command;

use d0l_synth::synth::synthesize_general;
use d0l_synth::verify::{verify_growth, Method};
use d0l_synth::{parse_polynomial, Polynomial};
use d0l_synth_cli::json::{SystemDocument, VerdictDocument};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn d0l(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_d0l")).args(args).output().expect("binary runs");
    Run {
        code: output.status.code().expect("exit code"),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

fn table_rows(stdout: &str) -> Vec<Vec<String>> {
    stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(str::to_owned).collect())
        .collect()
}

#[test]
fn decide_exit_codes() {
    let r = d0l(&["decide", "x^3+1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("verdict: Member"));
    assert!(r.stdout.contains("shift_k: 0"));

    let r = d0l(&["decide", "x-1"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("witness_n: 0"));
    assert!(r.stdout.contains("reason: NonPositive"));

    let r = d0l(&["decide", "x/2+1"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("witness_n: 1"));
    assert!(r.stdout.contains("reason: NonInteger"));

    let r = d0l(&["decide", "0"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("ZeroPolynomial"));
}

#[test]
fn decide_json() {
    let r = d0l(&["decide", "(x-2)^2+2", "--json"]);
    assert_eq!(r.code, 0);
    let doc: VerdictDocument = serde_json::from_str(&r.stdout).unwrap();
    match doc {
        VerdictDocument::Member { shift_k, prefix_values, .. } => {
            assert_eq!(shift_k, 2);
            assert_eq!(prefix_values, vec![6.into(), 3.into()]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_and_usage_errors_exit_two() {
    for args in [
        vec!["decide", "2x"],
        vec!["decide", "x^-1"],
        vec!["decide", "x^1.5"],
        vec!["synth", "(x"],
        vec!["verify", "x", "--n-max", "many"],
        vec!["frobnicate"],
        vec![],
    ] {
        let r = d0l(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty());
    }
    let r = d0l(&["decide", "x^-1"]);
    assert!(r.stderr.contains("negative"), "{}", r.stderr);
}

#[test]
fn synth_text_format() {
    let r = d0l(&["synth", "x^3+1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("axiom: a3\n"));
    assert!(r.stdout.contains("a1 -> a1 a0 a0 a0 a0 a0 a0\n"));
    assert!(r.stdout.contains("a2 -> a2 a0 a0 a0 a0 a0 a1\n"));
    assert!(r.stdout.contains("a3 -> a3 a2\n"));

    let r = d0l(&["synth", "5"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("axiom: a0 a0 a0 a0 a0\n"));
    assert!(r.stdout.contains("alphabet: a0\n"));
}

#[test]
fn synth_rejects_non_members() {
    let r = d0l(&["synth", "x-1"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("verdict: NotMember"));
}

#[test]
fn synth_json_round_trips_through_verification() {
    for text in ["x^3+1", "(x-2)^2+2", "5", "(x-4)^4+1", "1/2*x^2 + 1/2*x + 1"] {
        let r = d0l(&["synth", text, "--format", "json"]);
        assert_eq!(r.code, 0, "{text}");
        let doc: SystemDocument = serde_json::from_str(&r.stdout).unwrap();
        let system = doc.to_system().unwrap();
        let f = doc.polynomial().unwrap();
        assert_eq!(f, parse_polynomial(text).unwrap());

        let direct = synthesize_general(&f).unwrap();
        assert_eq!(system, direct.system);
        assert!(verify_growth(&system, &f, 20, Method::Both).unwrap().passed());
    }
}

#[test]
fn synth_json_shifted_example() {
    let r = d0l(&["synth", "(x-2)^2+2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(value["shift_k"], 2);
    assert_eq!(value["degree"], 2);
    assert_eq!(value["polynomial"], "x^2 - 4*x + 6");
    assert_eq!(value["alphabet"], serde_json::json!(["e", "b1", "b2", "a0", "a1", "a2"]));
    assert_eq!(value["axiom"], serde_json::json!(["e", "e", "e", "e", "e", "b1"]));
    assert_eq!(value["rules"]["b1"], serde_json::json!(["e", "e", "b2"]));
}

#[test]
fn synth_out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("system.json");
    let r = d0l(&["synth", "x^3+1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let doc: SystemDocument = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.axiom, vec!["a3"]);
}

#[test]
fn verify_commands() {
    let r = d0l(&["verify", "x^3+1", "--n-max", "30", "--method", "both"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.starts_with("PASS"));

    let r = d0l(&["verify", "x-1", "--n-max", "5"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("NotMember"));

    let r = d0l(&["verify", "(x-2)^2+2", "--n-max", "30"]);
    assert_eq!(r.code, 0);

    let r = d0l(&["verify", "x^2+1"]);
    assert!(r.stdout.contains("[0, 10]"), "default n-max is 10: {}", r.stdout);
}

#[test]
fn verify_expand_cap_is_an_error() {
    // x^6 + 1 at n = 200 is 6.4e13 letters, far past the expansion cap
    let r = d0l(&["verify", "x^6+1", "--n-max", "200", "--method", "expand"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("cap"));
}

#[test]
fn trace_tables() {
    let r = d0l(&["trace", "x^3+1", "--n-max", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        table_rows(&r.stdout),
        vec![
            vec!["0", "1", "1", "✓"],
            vec!["1", "2", "2", "✓"],
            vec!["2", "9", "9", "✓"],
            vec!["3", "28", "28", "✓"],
        ]
    );

    let r = d0l(&["trace", "5", "--n-max", "2"]);
    assert_eq!(table_rows(&r.stdout), vec![vec!["0", "5", "5", "✓"], vec!["1", "5", "5", "✓"], vec!["2", "5", "5", "✓"]]);

    let r = d0l(&["trace", "(x-2)^2+2", "--n-max", "4"]);
    let lengths: Vec<String> = table_rows(&r.stdout).into_iter().map(|row| row[1].clone()).collect();
    assert_eq!(lengths, ["6", "3", "2", "3", "6"]);

    let r = d0l(&["trace", "x^2"]);
    assert_eq!(r.code, 1);
    assert_eq!(d0l(&["trace", "x+1"]).stdout.lines().count(), 12);
}

#[test]
fn printed_polynomials_reparse() {
    for text in ["x^3+1", "(x-2)^2+2", "(x-3)^4+7", "1/2*x^2+1/2*x+1", "x^5/120 - x/7 + 3"] {
        let f = parse_polynomial(text).unwrap();
        assert_eq!(parse_polynomial(&f.to_string()).unwrap(), f);
    }
    assert_eq!(parse_polynomial(&Polynomial::zero().to_string()).unwrap(), Polynomial::zero());
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = d0l_synth_cli::run(["d0l", "decide", "x^3+1"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), d0l(&["decide", "x^3+1"]).stdout);
}
