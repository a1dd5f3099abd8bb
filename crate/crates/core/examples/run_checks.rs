//! Runs the fast checks of one section and prints the JSON report.

use fano_chow::checks::{run_all, Filter, RunOptions};

fn main() {
    let filter = Filter { section: Some("§3".into()), slow: false };
    let summary = run_all(&filter, &RunOptions { timing: false, ..RunOptions::default() });
    print!("{}", summary.to_json());
}
