use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn key_expansion_of_e() {
    let o = run(&["expand", "--basis", "key", "(0,2,1,2)"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines, ["(0,2,1,2) : 1", "(1,1,1,2) : q"]);
}

#[test]
fn slide_expansion_of_e() {
    let o = run(&["expand", "--basis", "slide", "(0,2,1,2)"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7, "{out}");
    assert!(out.contains("(1,2,1,1) : 1 + q"));
}

#[test]
fn counts() {
    for (fam, n) in [("SKD", "10"), ("SSKD", "20"), ("SSKT", "16"), ("SKT", "5")] {
        let o = run(&["enumerate", "--family", fam, "(0,2,1,2)", "--count"]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), n, "{fam}");
    }
}

#[test]
fn structured_output_parses() {
    let o = run(&["--format", "structured", "enumerate", "--family", "SKD", "(0,2,1,2)", "--count"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 10);
    let o = run(&["--format", "structured", "classes", "(0,2,1,2)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_array() || v.is_object());
}

#[test]
fn statistics_of_a_filling() {
    let o = run(&["stats", "1,6;2;3,4,2;;;5,5"]);
    let out = stdout(&o);
    assert!(out.contains("maj: 3") && out.contains("coinv: 2"), "{out}");
    let o = run(&["stats", "--young", "5,2,4,6;2,3,1;5"]);
    let out = stdout(&o);
    assert!(out.contains("comaj: 3") && out.contains("inv: 3"), "{out}");
}

#[test]
fn kostka_tables() {
    let o = run(&["kostka", "(2,2,1)"]);
    assert!(stdout(&o).lines().any(|l| l == "(3,2) : t + t^2"));
    let o = run(&["nskostka", "(3,0,2)"]);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "(2,1,2) : q"));
    assert!(out.lines().any(|l| l == "(1,2,2) : q^2"));
}

#[test]
fn refine_reports_without_failing() {
    let o = run(&["refine", "(3,0,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("condition not met"));
    let o = run(&["refine", "(0,0,2,1,2)"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exact_evaluation() {
    let o = run(&["eval", "(0,1)", "--x", "2,3", "--q", "1/2", "--t", "1/3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "23/5");
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(run(&["enumerate", "--family", "SKD", "(0,2"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--family", "XYZ", "(1)"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "(0,1)", "--x", "2,3", "--q", "1", "--t", "1"]).status.code(), Some(2));
    let o = run(&["stats", "1,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn negative_parameters_are_values() {
    let o = run(&["eval", "(0,1)", "--x", "-2,3", "--q", "1/2", "--t", "-1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // 3 + (1 - t)/(1 - q t) * (-2) with t = -1, q = 1/2
    assert_eq!(stdout(&o).trim(), "1/3");
}
