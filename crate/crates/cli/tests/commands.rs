use std::process::Command;

use mnforge::export::SeriesRecord;
use mnforge::{eval_str, PrimeTable, Series};
use mnforge_cli::{run_command, Format, Status};

fn run(args: &[&str]) -> mnforge_cli::CommandResult {
    run_command(std::iter::once("mnforge").chain(args.iter().copied()))
}

fn text(args: &[&str]) -> String {
    let r = run(args);
    assert_eq!(r.status, Status::Ok, "{args:?}: {}", r.diagnostics);
    r.text
}

#[test]
fn order_of_inverse_generators() {
    assert_eq!(text(&["order", "x1^-1", "x2^-1"]), "LT\n");
    assert_eq!(text(&["order", "x2", "x1*x2^0"]), "LT\n");
    assert_eq!(text(&["order", "x1*x2", "x2*x1"]), "EQ\n");
    assert_eq!(text(&["order", "x1", "e"]), "GT\n");
}

#[test]
fn gamma_witness_output() {
    assert_eq!(text(&["gamma-witness", "--N", "5", "--deg", "3"]), "6\nabsent-below-degree: true\n");
    let r = run(&["gamma-witness", "--N", "2", "--deg", "3"]);
    assert_eq!(r.status, Status::Error);
    assert_ne!(r.exit_code, 0);
}

#[test]
fn eval_examples() {
    assert_eq!(text(&["eval", "s1*x1 - x1*s1"]), "2*s1*x1\n");
    assert_eq!(text(&["eval", "comm(x1, s1, 1)"]), "-1*e\n");
    assert_eq!(text(&["eval", "inv(1 - x1, 2)"]), "trunc(1*e + 1*x1 + 1*x1^2, 2)\n");
    let g = text(&["eval", "gamma(3)^2"]);
    assert!(g.contains("2*x1^-1*x2^-1"), "{g}");
    assert_eq!(text(&["eval", "-x1"]), "-1*x1\n");
}

#[test]
fn parse_errors_report_offsets() {
    let r = run(&["eval", "x1^"]);
    assert_eq!(r.status, Status::Error);
    assert_eq!(r.exit_code, 1);
    assert!(r.diagnostics.contains("offset 3"), "{}", r.diagnostics);
}

#[test]
fn central_command() {
    assert_eq!(text(&["central", "x1^2 - 3*x2^-4"]), "central: true\nwindow-test: true (indices 1..=2)\n");
    assert!(text(&["central", "s1"]).starts_with("central: false"));
    let r = run(&["central", "inv(1 - x1, 2)"]);
    assert_eq!(r.status, Status::Error);
}

#[test]
fn algebra_commands() {
    assert_eq!(text(&["centralizer", "--n", "1", "--a", "-1", "--b", "-1"]), "1\n");
    assert_eq!(text(&["centralizer", "--n", "2", "--a", "1,1", "--b", "1,1"]), "1\n");
    assert_eq!(text(&["norm", "--n", "1", "--a", "-1", "--b", "-1", "1,2,3,4"]), "900\n");
    assert_eq!(text(&["norm", "--n", "1", "--a=-1", "--b=-1", "0", "-1", "0", "0"]), "1\n");
    let r = run(&["norm", "--n", "1", "1,2,3"]);
    assert_eq!(r.status, Status::Error);
    let r = run(&["centralizer", "--n", "1", "--a", "0", "--b", "1"]);
    assert_eq!(r.status, Status::Error);
}

#[test]
fn usage_errors() {
    let r = run(&["frobnicate"]);
    assert_eq!(r.exit_code, 2);
    let r = run(&["verify", "nope"]);
    assert_eq!(r.exit_code, 2);
    let r = run(&["--help"]);
    assert_eq!(r.status, Status::Ok);
    assert!(r.text.contains("gamma-witness"));
}

#[test]
fn json_records_carry_schema_version() {
    let r = run(&["--format", "json", "eval", "3 - 1/2*s1*x2^-1 + x1"]);
    let out = r.stdout(Format::Json);
    assert_eq!(out.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "eval");
    let rec: SeriesRecord = serde_json::from_value(v["series"].clone()).unwrap();
    let p = PrimeTable::default();
    assert_eq!(Series::try_from(&rec).unwrap(), eval_str("3 - 1/2*s1*x2^-1 + x1", &p).unwrap());
}

#[test]
fn verify_single_suite() {
    let r = run(&["verify", "gamma", "--seed", "3"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.text.starts_with("suite=gamma checks=2"), "{}", r.text);
    assert!(r.text.contains("failures=0 seed=3"));
    assert!(r.diagnostics.contains("elapsed="));
    let a = run(&["verify", "field", "--seed", "9", "--trials", "3"]);
    let b = run(&["verify", "field", "--seed", "9", "--trials", "3"]);
    assert_eq!(a.text, b.text);
}

#[test]
fn prime_override() {
    assert_eq!(text(&["--primes", "3,5", "eval", "s1*s1 + s3*s3"]), "10*e\n");
    let r = run(&["--primes", "5,3", "eval", "1"]);
    assert_eq!(r.status, Status::Error);
}

#[test]
fn default_depth_flag() {
    assert_eq!(text(&["--depth", "1", "eval", "inv(1 - x1)"]), "trunc(1*e + 1*x1, 1)\n");
    assert_eq!(run(&["eval", "inv(1 - x1)"]).status, Status::Error);
    assert_eq!(run(&["--depth", "0", "eval", "1"]).exit_code, 2);
}

#[test]
fn environment_fallbacks_and_precedence() {
    let bin = env!("CARGO_BIN_EXE_mnforge");
    let out = Command::new(bin)
        .args(["eval", "s1*s1"])
        .env("MNFORGE_PRIMES", "7")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "7*e\n");
    let out = Command::new(bin)
        .args(["--primes", "11", "eval", "s1*s1"])
        .env("MNFORGE_PRIMES", "7")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "11*e\n");
    let out = Command::new(bin)
        .args(["eval", "inv(1 - x1)"])
        .env("MNFORGE_DEPTH", "1")
        .env("MNFORGE_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["text"], "trunc(1*e + 1*x1, 1)");
    assert!(out.status.success());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_mnforge");
    let out = Command::new(bin).args(["eval", "1 +"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    let out = Command::new(bin).args(["verify", "all", "--trials", "0"]).output().unwrap();
    assert!(out.status.success());
}
