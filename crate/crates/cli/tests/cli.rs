use std::process::{Command, Output};

use eqschubert::qhmodule::StructureTable;
use eqschubert::Poly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqschubert")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn poly(s: &str) -> Poly {
    s.trim().parse().unwrap()
}

#[test]
fn giambelli_rows() {
    let out = run(&["giambelli", "-n", "3", "-w", "321"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(poly(&stdout(&out)), poly("(x1 - t2)*(x1*x2 + q1 - (x1 + x2)*t1 + t1^2)"));

    let out = run(&["giambelli", "-n", "3", "-w", "231"]);
    assert_eq!(poly(&stdout(&out)), poly("x1*x2 + q1 - (x1 + x2)*t1 + t1^2"));

    let out = run(&["giambelli", "-n", "3", "-w", "123"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn giambelli_partial_shape() {
    let out = run(&["giambelli", "--shape", "2;3", "-w", "132"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).trim().is_empty());

    let out = run(&["giambelli", "--shape", "2;3", "-w", "213"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn multiply_rows() {
    let out = run(&["multiply", "-n", "3", "-u", "132", "-v", "231"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(-t1 + t3)*s[231] + q2*s[213]\n");

    let out = run(&["multiply", "-n", "3", "-u", "213", "-v", "213"]);
    assert_eq!(stdout(&out), "s[312] + (-t1 + t2)*s[213] + q1*s[123]\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["multiply", "-n", "3", "-u", "112", "-v", "231"][..],
        &["giambelli", "-n", "3", "-w", "4123"][..],
        &["giambelli", "--shape", "3;2", "-w", "1"][..],
        &["verify", "--suite", "nonsense"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_json_round_trip() {
    let out = run(&["table", "-n", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed = StructureTable::from_json_str(&text).unwrap();
    assert_eq!(parsed.entries.len(), 21);
    assert_eq!(parsed.to_json_string() + "\n", text);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["table", "-n", "3"]);
    let b = run(&["table", "-n", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let latex = stdout(&run(&["table", "-n", "2", "--format", "latex"]));
    assert!(latex.starts_with("\\begin{array}"));
}

#[test]
fn expand_reads_text_and_json() {
    let dir = std::env::temp_dir().join(format!("eqschubert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = dir.join("p.txt");
    std::fs::write(&text, "x1^2 - x1*t1 - x1*t2 + t1*t2").unwrap();
    let out = run(&["expand", "-n", "3", "--poly", text.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "s[312] + q1*s[123]\n");

    let json = dir.join("p.json");
    std::fs::write(&json, poly("x1 + x2").to_json_string()).unwrap();
    let out = run(&["expand", "-n", "3", "--poly", json.to_str().unwrap(), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["window"], 3);
    assert_eq!(value["terms"].as_array().unwrap().len(), 2);

    let sink = dir.join("out.txt");
    let out = run(&["giambelli", "-n", "2", "-w", "21", "-o", sink.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&sink).unwrap(), "x1 - t1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn passing_suites_exit_0() {
    let out = run(&["verify", "--suite", "presentation", "--suite", "straightening", "--suite", "stability"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("ok"));
}

#[test]
fn tables_suite_reports_the_two_disputed_cells() {
    let out = run(&["verify", "--suite", "tables", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports[0]["failures"].as_array().unwrap().is_empty(), "giambelli rows: {}", reports[0]);
    let failures: Vec<&str> = reports[1]["failures"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
    assert_eq!(failures.len(), 2, "{failures:?}");
    assert!(failures[0].starts_with("312 * 312"));
    assert!(failures[1].starts_with("312 * 321"));
}
