//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 8 asks for a 10 -> 5 surjection for the `τ₁ ∧ γ` class of
//! `ata`; the syntactic monoid of `a⁺ta⁺` has 7 elements, so that row is
//! expected to fail with exactly those sizes and a surjection present.

use std::process::ExitCode;

use synmon::repro::{run_all, Options, Report};

/// Criteria whose stated numbers are unreachable; each must still fail.
const KNOWN_UNREACHABLE: [usize; 1] = [8];

fn problems(report: &Report) -> Vec<String> {
    let mut out = Vec::new();
    for row in &report.rows {
        match (KNOWN_UNREACHABLE.contains(&row.id), row.passed) {
            (true, true) => out.push(format!("criterion {} was expected to fail", row.id)),
            (false, false) => out.push(format!("criterion {} failed: {}", row.id, row.summary)),
            _ => {}
        }
    }
    let eight = &report.rows[7];
    if !eight.summary.starts_with("10->7, 5->5, 6->5") || !eight.detail[0].contains("onto true") {
        out.push(format!("criterion 8 changed: {} / {}", eight.summary, eight.detail[0]));
    }
    out
}

fn main() -> ExitCode {
    let report = run_all(&Options::default());
    println!("{report}");
    let problems = problems(&report);
    for p in &problems {
        println!("acceptance: {p}");
    }
    if problems.is_empty() {
        println!("acceptance: ok ({} known unreachable: {:?})", KNOWN_UNREACHABLE.len(), KNOWN_UNREACHABLE);
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
