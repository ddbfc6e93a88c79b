use std::process::Command;

use idealclose::cli::{parse_session, run_text, selftest, RunOptions, SESSIONS};
use idealclose::closure::Budget;
use idealclose::Error;

fn run(text: &str) -> idealclose::cli::RunOutcome {
    run_text(text, &RunOptions::default())
}

#[test]
fn shipped_sessions_round_trip_through_the_printer() {
    for (name, text) in SESSIONS {
        let session = parse_session(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = session.to_string();
        let again = parse_session(&printed).unwrap();
        assert_eq!(session, again, "{name}");
        assert_eq!(printed, again.to_string(), "{name}");
    }
}

#[test]
fn selftest_passes() {
    let report = selftest(&RunOptions::default());
    assert!(report.ok, "{}", report.lines.join("\n"));
    assert_eq!(report.lines.len(), SESSIONS.len());
}

#[test]
fn parse_errors_carry_line_and_column() {
    let err = parse_session("ring R = poly(F2; x | x^2)\n\ncheck bogus identity on lattice(R)\n").unwrap_err();
    match err {
        Error::Parse { line, col, .. } => assert_eq!((line, col), (3, 7)),
        other => panic!("unexpected {other}"),
    }
    let out = run("ring R = poly(F2; x\n");
    assert_eq!(out.exit_code, 2);
    assert!(out.error.unwrap().contains("1:"));
}

#[test]
fn unknown_names_abort_before_execution() {
    let out = run("ring R = poly(F2; x | x^3)\nideal I = (x) in R\ncompute bf(I)\ncompute mystery(I)\n");
    assert_eq!(out.exit_code, 2);
    assert!(out.records.is_empty());
    let msg = out.error.unwrap();
    assert!(msg.starts_with("line 4:") && msg.contains("mystery"), "{msg}");
}

#[test]
fn bad_polynomials_report_the_session_column() {
    let out = run("ring Q = poly(QQ; x, y)\nideal I = (x, y + w) in Q\n");
    assert_eq!(out.exit_code, 2);
    let msg = out.error.unwrap();
    assert!(msg.starts_with("line 2:") && msg.contains("column 19"), "{msg}");
}

#[test]
fn empty_and_comment_only_sessions_succeed() {
    for text in ["", "# nothing here\n\n   # still nothing\n"] {
        let out = run(text);
        assert_eq!((out.exit_code, out.records.len()), (0, 0));
        assert_eq!(out.jsonl(), "");
    }
}

#[test]
fn undecided_records_fail_only_under_strict() {
    let text = "ring Q = poly(QQ; x, y)\nideal I = (x^2 + y^3) in Q\ncompute radical(I)\n";
    let lax = run(text);
    assert_eq!(lax.exit_code, 0);
    assert_eq!(lax.records[0].record.status, "unknown");
    let strict = run_text(text, &RunOptions { strict: true, ..RunOptions::default() });
    assert_eq!(strict.exit_code, 1);

    let marked = "ring R = poly(F2; x | x^3)\ncheck axioms radical on lattice(R) strict\n";
    assert_eq!(run(marked).exit_code, 0);
}

#[test]
fn resource_exhaustion_aborts_with_the_command() {
    let text = "ring Q = poly(QQ; x, y, z)\n\
                ideal I = (x^3 - 2*x*y + z, x^2*y - 2*y^2 + x*z, y*z^2 - x) in Q\n\
                member x in radical(I)\n";
    let budget: Budget = "monomial_budget=3".parse().unwrap();
    let out = run_text(text, &RunOptions { budget, strict: false });
    assert_eq!(out.exit_code, 2);
    let msg = out.error.unwrap();
    assert!(msg.starts_with("line 3: `member x in radical(I)`") && msg.contains("budget"), "{msg}");
}

#[test]
fn failing_checks_exit_one_and_expectations_must_be_met() {
    let base = "ring R = poly(F2; x, y | x^2, x*y, y^2)\nideal M = (x, y) in R\n";
    let fails = run(&format!("{base}check semiprime vop on family(M)\n"));
    assert_eq!(fails.exit_code, 1);
    assert_eq!(fails.records[0].record.status, "fail");
    let expected = run(&format!("{base}check semiprime vop on family(M) expect violation\n"));
    assert_eq!(expected.exit_code, 0);
    assert_eq!(expected.records[0].record.status, "expected-violation");
    let missing = run(&format!("{base}check semiprime frob on family(M) expect violation\n"));
    assert_eq!(missing.exit_code, 1);
    assert_eq!(missing.records[0].record.status, "missing-expected-violation");
}

#[test]
fn records_serialize_with_the_documented_fields() {
    let out = run("ring R = poly(F2; x, y | x^2, x*y, y^2)\nideal M = (x, y) in R\ncompute vop(M)\n");
    let line = out.jsonl();
    let value: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["check", "closure", "ring", "status", "witnesses"]);
    assert_eq!(value["status"], "pass");
}

#[test]
fn binary_runs_sessions_and_selftest() {
    let bin = env!("CARGO_BIN_EXE_idealclose");
    let session = concat!(env!("CARGO_MANIFEST_DIR"), "/sessions/v_operation.session");
    let out = Command::new(bin).args(["run", session, "--budget", "e_max=4,n_max=6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("expected-violation"));

    let bad = Command::new(bin).args(["run", session, "--budget", "e_max=zero"]).output().unwrap();
    assert_ne!(bad.status.code(), Some(0));

    let missing = Command::new(bin).args(["run", "/nonexistent/file.session"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}
