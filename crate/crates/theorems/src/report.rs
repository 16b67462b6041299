use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    /// One line per failed case, naming the offending input.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    /// Wall time; left out of serialized output so reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
    pub passed: bool,
}

impl SuiteReport {
    /// Combines reports under one name, keeping every case, note and failure.
    pub fn merge(name: &str, reports: Vec<SuiteReport>) -> SuiteReport {
        let mut r = Recorder::new(name);
        for rep in reports {
            r.cases += rep.cases;
            r.failures.extend(rep.failures.into_iter().map(|f| format!("[{}] {f}", rep.name)));
            r.notes.extend(rep.notes.into_iter().map(|n| format!("[{}] {n}", rep.name)));
            r.extra += rep.elapsed;
        }
        r.finish()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} {} ({} cases, {} failures)", self.name, self.cases, self.failures.len())?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for x in &self.failures {
            writeln!(f, "  failure: {x}")?;
        }
        Ok(())
    }
}

/// Accumulates checks for a suite.
pub(crate) struct Recorder {
    name: String,
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
    start: Instant,
    extra: Duration,
}

impl Recorder {
    pub(crate) fn new(name: &str) -> Recorder {
        Recorder {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
            extra: Duration::ZERO,
        }
    }

    /// Counts one case; `describe` runs only when the case fails.
    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
        ok
    }

    pub(crate) fn fail(&mut self, msg: impl Into<String>) {
        self.cases += 1;
        self.failures.push(msg.into());
    }

    pub(crate) fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub(crate) fn finish(self) -> SuiteReport {
        SuiteReport {
            passed: self.failures.is_empty(),
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            notes: self.notes,
            elapsed: self.start.elapsed().max(self.extra),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_tracks_failures() {
        let mut r = Recorder::new("t");
        r.check(true, || unreachable!());
        let ok = r.finish();
        assert!(ok.passed && ok.cases == 1);
        let mut r = Recorder::new("u");
        r.check(false, || "bad".into());
        let bad = r.finish();
        assert!(!bad.passed);
        let merged = SuiteReport::merge("all", vec![ok, bad]);
        assert_eq!((merged.cases, merged.passed), (2, false));
        assert_eq!(merged.failures, vec!["[u] bad"]);
        assert!(merged.to_string().starts_with("FAIL all (2 cases, 1 failures)"));
    }

    #[test]
    fn json_omits_timing() {
        let r = Recorder::new("t").finish();
        let json = r.to_json();
        assert!(!json.contains("elapsed"));
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.name, "t");
    }
}
