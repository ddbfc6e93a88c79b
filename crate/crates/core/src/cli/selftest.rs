use super::runner::{run_text, RunOptions};

/// The shipped acceptance sessions, by file name.
pub const SESSIONS: &[(&str, &str)] = &[
    ("v_operation.session", include_str!("../../sessions/v_operation.session")),
    ("basically_full.session", include_str!("../../sessions/basically_full.session")),
    ("integral_closure.session", include_str!("../../sessions/integral_closure.session")),
    ("axioms.session", include_str!("../../sessions/axioms.session")),
    ("preclosures.session", include_str!("../../sessions/preclosures.session")),
    ("constructions.session", include_str!("../../sessions/constructions.session")),
    ("reductions.session", include_str!("../../sessions/reductions.session")),
];

#[derive(Clone, Debug, Default)]
pub struct SelftestReport {
    pub lines: Vec<String>,
    pub ok: bool,
}

/// Drops the first `expect violation` annotation of a session.
pub fn without_first_expectation(text: &str) -> Option<String> {
    let at = text.find(" expect violation")?;
    Some(format!("{}{}", &text[..at], &text[at + " expect violation".len()..]))
}

/// Runs every shipped session twice. Each must exit 0 with byte-identical
/// reports, and a session that expects a violation must fail once the
/// expectation is removed.
pub fn selftest(options: &RunOptions) -> SelftestReport {
    let mut report = SelftestReport { lines: Vec::new(), ok: true };
    for (name, text) in SESSIONS {
        let first = run_text(text, options);
        let second = run_text(text, options);
        let deterministic = first.jsonl() == second.jsonl();
        let mut ok = first.exit_code == 0 && deterministic;
        let mut note = format!("{} records, exit {}", first.records.len(), first.exit_code);
        if let Some(e) = &first.error {
            note.push_str(&format!(", error: {e}"));
        }
        if !deterministic {
            note.push_str(", output differs between runs");
        }
        if let Some(stripped) = without_first_expectation(text) {
            let flipped = run_text(&stripped, options).exit_code;
            ok &= flipped != 0;
            note.push_str(&format!(", exit {flipped} without the first expectation"));
        }
        report.ok &= ok;
        report.lines.push(format!("{} {name}: {note}", if ok { "ok  " } else { "FAIL" }));
    }
    report
}
