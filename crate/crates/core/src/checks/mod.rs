//! Named checks with exact-value transcripts, and a runner producing text or
//! JSON reports.

mod algebra;
mod geometry;
mod props;

use std::fmt::{self, Display};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

pub use props::{property_suite, PropertyResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown check `{0}`")]
    Unknown(String),
    #[error("unknown output format `{0}` (expected text or json)")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Speed {
    Fast,
    Slow,
}

/// A failure raised while computing, as opposed to a wrong value.
#[derive(Debug)]
pub struct Abort(String);

impl<E: std::error::Error> From<E> for Abort {
    fn from(e: E) -> Self {
        Abort(e.to_string())
    }
}

pub type Outcome = Result<(), Abort>;

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub quantity: String,
    pub computed: String,
    pub expected: String,
    pub ok: bool,
}

/// Collects the transcript of a running check.
pub struct Ctx {
    seed: u64,
    entries: Vec<Entry>,
    notes: Vec<String>,
}

impl Ctx {
    fn new(seed: u64) -> Self {
        Ctx { seed, entries: Vec::new(), notes: Vec::new() }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn eq<T: Display + PartialEq>(&mut self, quantity: &str, computed: T, expected: T) {
        let ok = computed == expected;
        self.entries.push(Entry { quantity: quantity.into(), computed: computed.to_string(), expected: expected.to_string(), ok });
    }

    pub fn holds(&mut self, quantity: &str, value: bool) {
        self.eq(quantity, value, true);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

pub struct Check {
    pub name: &'static str,
    /// Group tag `§1`..`§4`, or `core` for the property battery.
    pub section: &'static str,
    /// What is being verified, with a short quotation of the claim.
    pub reference: &'static str,
    pub speed: Speed,
    run: fn(&mut Ctx) -> Outcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub section: String,
    #[serde(rename = "ref")]
    pub reference: String,
    pub speed: Speed,
    pub status: Status,
    pub transcript: Vec<Entry>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub seed: u64,
    pub workers: usize,
    /// Record elapsed time; off for byte-stable reports.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 2024, workers: 1, timing: true }
    }
}

/// Selection for [`run_all`].
#[derive(Debug, Clone, Default)]
pub struct Filter {
    /// `§N`, `N`, or `core`.
    pub section: Option<String>,
    /// Include slow checks.
    pub slow: bool,
}

impl Filter {
    fn accepts(&self, c: &Check) -> bool {
        if c.speed == Speed::Slow && !self.slow {
            return false;
        }
        match &self.section {
            None => true,
            Some(s) => {
                let s = s.trim();
                c.section == s || c.section.strip_prefix('§') == Some(s)
            }
        }
    }
}

/// All registered checks, sorted by name.
pub fn registry() -> Vec<&'static Check> {
    let mut all: Vec<&'static Check> = geometry::CHECKS.iter().chain(algebra::CHECKS.iter()).chain(props::CHECKS.iter()).collect();
    all.sort_by_key(|c| c.name);
    all
}

pub fn find(name: &str) -> Result<&'static Check, CheckError> {
    registry().into_iter().find(|c| c.name == name).ok_or_else(|| CheckError::Unknown(name.to_string()))
}

fn execute(check: &Check, opts: &RunOptions) -> CheckReport {
    let mut ctx = Ctx::new(opts.seed);
    let start = Instant::now();
    let result = (check.run)(&mut ctx);
    let millis = opts.timing.then(|| start.elapsed().as_millis() as u64);
    let (status, error) = match result {
        Err(Abort(msg)) => (Status::Error, Some(msg)),
        Ok(()) if ctx.entries.iter().all(|e| e.ok) && !ctx.entries.is_empty() => (Status::Pass, None),
        Ok(()) => (Status::Fail, None),
    };
    CheckReport {
        name: check.name.into(),
        section: check.section.into(),
        reference: check.reference.into(),
        speed: check.speed,
        status,
        transcript: ctx.entries,
        notes: ctx.notes,
        error,
        millis,
    }
}

pub fn run(name: &str, opts: &RunOptions) -> Result<CheckReport, CheckError> {
    Ok(execute(find(name)?, opts))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckReport>,
}

impl Summary {
    fn new(seed: u64, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.passed()).count();
        Summary { seed, passed, failed: checks.len() - passed, checks }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("seed {}\n", self.seed);
        for c in &self.checks {
            s.push_str(&render_check(c));
        }
        s.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        s
    }

    pub fn render(&self, format: &str) -> Result<String, CheckError> {
        match format {
            "text" => Ok(self.to_text()),
            "json" => Ok(self.to_json()),
            other => Err(CheckError::Format(other.to_string())),
        }
    }
}

fn render_check(c: &CheckReport) -> String {
    let mut s = format!("[{}] {} ({}) {}", c.status, c.name, c.section, c.reference);
    if let Some(ms) = c.millis {
        s.push_str(&format!(" [{ms} ms]"));
    }
    s.push('\n');
    for e in &c.transcript {
        let mark = if e.ok { "ok" } else { "MISMATCH" };
        s.push_str(&format!("    {}: {} (expected {}) {}\n", e.quantity, e.computed, e.expected, mark));
    }
    for n in &c.notes {
        s.push_str(&format!("    note: {n}\n"));
    }
    if let Some(err) = &c.error {
        s.push_str(&format!("    error: {err}\n"));
    }
    s
}

/// Runs a single check and wraps it in a summary.
pub fn run_one(name: &str, opts: &RunOptions) -> Result<Summary, CheckError> {
    Ok(Summary::new(opts.seed, vec![run(name, opts)?]))
}

/// Runs every selected check on up to `opts.workers` threads.
pub fn run_all(filter: &Filter, opts: &RunOptions) -> Summary {
    let selected: Vec<&'static Check> = registry().into_iter().filter(|c| filter.accepts(c)).collect();
    let queue = Mutex::new(selected.into_iter());
    let results = Mutex::new(Vec::new());
    let workers = opts.workers.max(1);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let next = queue.lock().expect("queue lock").next();
                let Some(check) = next else { break };
                let report = execute(check, opts);
                results.lock().expect("results lock").push(report);
            });
        }
    });
    Summary::new(opts.seed, results.into_inner().expect("results lock"))
}

/// Table printed by `verify list`.
pub fn list_text() -> String {
    let mut s = String::new();
    for c in registry() {
        let speed = match c.speed {
            Speed::Fast => "fast",
            Speed::Slow => "slow",
        };
        s.push_str(&format!("{:<28} {:<5} {:<5} {}\n", c.name, c.section, speed, c.reference));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_plentiful() {
        let r = registry();
        let mut names: Vec<&str> = r.iter().map(|c| c.name).collect();
        names.dedup();
        assert_eq!(names.len(), r.len());
        assert!(r.len() >= 25);
        for s in ["§1", "§2", "§3", "§4"] {
            assert!(r.iter().any(|c| c.section == s), "{s}");
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(run("nonexistent", &RunOptions::default()).unwrap_err(), CheckError::Unknown("nonexistent".into()));
    }

    #[test]
    fn filters() {
        let f = Filter { section: Some("3".into()), slow: false };
        assert!(registry().iter().filter(|c| f.accepts(c)).all(|c| c.section == "§3"));
        let fast = Filter::default();
        assert!(registry().iter().filter(|c| fast.accepts(c)).all(|c| c.speed == Speed::Fast));
    }
}
