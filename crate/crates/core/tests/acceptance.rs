//! The sixteen acceptance criteria, one line each.

use std::process::ExitCode;

use fano_chow::checks::{run, RunOptions};

const CRITERIA: [(&str, &[&str]); 16] = [
    ("deg-FB-24", &["deg-FB-24"]),
    ("alphai-deg-6", &["alphai-deg-6"]),
    ("chow-B-presentation", &["chow-B-presentation"]),
    ("gensA2B-relation", &["gensA2B-relation"]),
    ("EiZi-vanishing", &["EiZi-vanishing"]),
    ("blowup-consistency", &["blowup-consistency"]),
    ("AI-coefficient", &["AI-coefficient"]),
    ("segre-birational", &["segre-birational"]),
    ("relative-canonical-I", &["relative-canonical-I"]),
    ("bott-six-weights", &["bott-six-weights", "bott-dimension-anchors"]),
    ("dimension-ledger", &["dimension-ledger"]),
    ("pencil-beta", &["pencil-beta"]),
    ("K-invariants", &["K-invariants"]),
    ("congruence-model", &["congruence-model"]),
    ("cubic-locus", &["cubic-locus"]),
    ("property-suites", &["property-suites"]),
];

fn main() -> ExitCode {
    let opts = RunOptions { timing: false, ..RunOptions::default() };
    let mut failed = 0;
    for (i, (criterion, checks)) in CRITERIA.iter().enumerate() {
        let mut ok = true;
        let mut detail = Vec::new();
        for name in *checks {
            match run(name, &opts) {
                Ok(r) => {
                    ok &= r.passed();
                    detail.extend(r.transcript.iter().filter(|e| !e.ok).map(|e| format!("{}: {} != {}", e.quantity, e.computed, e.expected)));
                    detail.extend(r.error);
                }
                Err(e) => {
                    ok = false;
                    detail.push(e.to_string());
                }
            }
        }
        println!("{} {:>2} {criterion}", if ok { "PASS" } else { "FAIL" }, i + 1);
        for d in detail {
            println!("        {d}");
        }
        failed += usize::from(!ok);
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
