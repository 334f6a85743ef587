use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const TWO_CLAUSES: &str = "p cnf 2 2\n1 -2 0\n-1 -2 0\n";
const UNSAT: &str = "p cnf 1 2\n1 0\n-1 0\n";
const TWO_CLAUSES_GOAL: &str = "((((p1 (/) (p1 (\\) p1)) * p2) / (((p1 * p2) / (p1 * p2)) \\ (p1 * p2))) * (((p1 * p2) / (p1 * p2)) \\ (p1 * (p2 (/) (p2 (\\) p2))))) * (((p1 * p2) / (((p1 * p2) / (p1 * p2)) \\ (p1 * p2))) * (((p1 * p2) / (p1 * p2)) \\ ((p1 (/) (p1 (\\) p1)) * (p2 (/) (p2 (\\) p2))))) |- (((p1 * p2) * (p1 * p2)) (/) (p1 (\\) p1)) (/) (p2 (\\) p2)";

fn lg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lg")).args(args).output().expect("run lg")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn prove_exit_codes() {
    assert_eq!(code(&lg(&["prove", "p |- p"])), 0);
    assert_eq!(code(&lg(&["prove", "a |- b"])), 1);
    assert_eq!(code(&lg(&["prove", "(a (/) b) * c |- (a * c) (/) b", "--grishin", "0"])), 2);
    assert_eq!(code(&lg(&["prove", "a * b * c |- a"])), 3);
    assert_eq!(code(&lg(&["prove"])), 3);
    assert_eq!(code(&lg(&["frobnicate"])), 3);
    assert_eq!(code(&lg(&["--help"])), 0);
}

#[test]
fn diagnostics_go_to_stderr() {
    let o = lg(&["prove", "a |- b"]);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unprovable"));
    let o = lg(&["prove", "a * b * c |- a"]);
    assert!(o.stdout.is_empty());
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn prove_then_check_is_lossless() {
    let dir = tempfile::tempdir().unwrap();
    let goal = write(dir.path(), "goal.txt", "(p1 (/) (p1 (\\) p1)) |- p1\n");
    let o = lg(&["prove", &format!("@{goal}"), "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let json = write(dir.path(), "d.json", &stdout(&o));
    let c = lg(&["check", &json]);
    assert_eq!(code(&c), 0, "{}", stdout(&c));
    assert!(stdout(&c).starts_with("valid: p1 (/) (p1 (\\) p1) |- p1"));
}

#[test]
fn check_rejects_bad_derivations() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"rule":"TensorL","conclusion":"a * b |- a * b","premises":[{"rule":"Ax","conclusion":"a |- a","premises":[]}]}"#,
    );
    let o = lg(&["check", &bad]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("invalid at root"));
    let junk = write(dir.path(), "junk.json", "{");
    assert_eq!(code(&lg(&["check", &junk])), 3);
    assert_eq!(code(&lg(&["check", "/nonexistent/file.json"])), 3);
}

#[test]
fn reduce_prints_the_encoding() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "two.cnf", TWO_CLAUSES);
    let o = lg(&["reduce", &cnf]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim_end(), TWO_CLAUSES_GOAL);
    let out = dir.path().join("goal.txt");
    assert_eq!(code(&lg(&["reduce", &cnf, "-o", out.to_str().unwrap()])), 0);
    assert_eq!(fs::read_to_string(&out).unwrap().trim_end(), TWO_CLAUSES_GOAL);
    let empty = write(dir.path(), "empty.cnf", "p cnf 1 1\n0\n");
    assert_eq!(code(&lg(&["reduce", &empty])), 3);
}

#[test]
fn witness_and_check_with_cut() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "two.cnf", TWO_CLAUSES);
    let o = lg(&["witness", &cnf, "--assignment", "1,0"]);
    assert_eq!(code(&o), 0);
    let json = write(dir.path(), "w.json", &stdout(&o));
    assert_eq!(code(&lg(&["check", &json])), 1);
    assert_eq!(code(&lg(&["check", &json, "--allow-cut"])), 0);
    assert_eq!(code(&lg(&["witness", &cnf, "--assignment", "1,1"])), 1);
    assert_eq!(code(&lg(&["witness", &cnf, "--assignment", "1"])), 3);
    assert_eq!(code(&lg(&["witness", &cnf, "--assignment", "yes"])), 3);
    let unsat = write(dir.path(), "unsat.cnf", UNSAT);
    assert_eq!(code(&lg(&["witness", &unsat])), 1);
}

#[test]
fn roundtrip_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let unsat = write(dir.path(), "unsat2.cnf", UNSAT);
    let o = lg(&["roundtrip", &unsat]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "consistent: both negative");
    let sat = write(dir.path(), "two.cnf", TWO_CLAUSES);
    let o = lg(&["roundtrip", &sat]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "consistent: both positive");
    let o = lg(&["roundtrip", &sat, "--grishin", "0"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn stats_report() {
    let o = lg(&["stats", "(p1 (/) (p1 (\\) p1)) |- p1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("length 2\n"));
    assert!(text.contains("grishin budget 1\n"));
    assert!(text.contains("depth budget 12\n"));
}

#[test]
fn latex_and_text_emitters() {
    let o = lg(&["prove", "a * b |- a * b", "--emit", "latex"]);
    assert!(stdout(&o).starts_with("\\infer[\\otimes L]"));
    let o = lg(&["prove", "a * b |- a * b", "--emit", "text"]);
    assert!(stdout(&o).starts_with("a * b |- a * b   [TensorL]"));
}
