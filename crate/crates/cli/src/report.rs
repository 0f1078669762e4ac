//! The report document printed by every analysis command.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use almg_core::CheckReport;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One check or result. `required` entries decide the exit status.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub required: bool,
    pub passed: bool,
    /// One line for the text report.
    pub summary: String,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Value,
    pub passed: bool,
    pub entries: Vec<Entry>,
    /// Microseconds per entry. Kept apart because it varies between runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, u64>>,
}

impl ReportDocument {
    pub fn new(command: &str, input: Value) -> Self {
        ReportDocument {
            tool: "almg".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input,
            passed: true,
            entries: Vec::new(),
            timing: Some(BTreeMap::new()),
        }
    }

    pub fn push(&mut self, entry: Entry, started: Instant) {
        if let Some(t) = &mut self.timing {
            t.insert(entry.name.clone(), started.elapsed().as_micros() as u64);
        }
        if entry.required && !entry.passed {
            self.passed = false;
        }
        self.entries.push(entry);
    }

    pub fn to_json(&self) -> String {
        // Going through `Value` sorts every object's keys.
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.command);
        for e in &self.entries {
            let mark = match (e.required, e.passed) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, _) => "INFO",
            };
            let _ = writeln!(out, "{mark} {:<28} {}", e.name, e.summary);
        }
        let _ = writeln!(out, "result: {}", if self.passed { "pass" } else { "fail" });
        if let Some(t) = &self.timing {
            let total: u64 = t.values().sum();
            let _ = writeln!(out, "time: {:.3} ms", total as f64 / 1000.0);
        }
        out
    }
}

pub fn tuple_text(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn check_summary(r: &CheckReport) -> String {
    let mut s = format!("checked {}", r.checked_count);
    if r.skipped_count > 0 {
        let _ = write!(s, ", skipped {}", r.skipped_count);
    }
    if let Some(w) = r.first_witness() {
        let _ = write!(s, ", {} failing, first {} {}", r.witness_total, w.law, tuple_text(&w.tuple));
    }
    s
}

pub fn check_entry(r: &CheckReport, required: bool) -> Entry {
    Entry {
        name: r.name.clone(),
        required,
        passed: r.passed,
        summary: check_summary(r),
        detail: serde_json::to_value(r).expect("report serializes"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trips_and_is_sorted() {
        let mut doc = ReportDocument::new("check", Value::String("x.alg".into()));
        doc.push(
            Entry {
                name: "demo".into(),
                required: true,
                passed: false,
                summary: "s".into(),
                detail: serde_json::json!({"b": 1, "a": [1, 2]}),
            },
            Instant::now(),
        );
        assert!(!doc.passed);
        let text = doc.to_json();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert!(text.find("\"command\"").unwrap() < text.find("\"entries\"").unwrap());
        doc.timing = None;
        assert!(!doc.to_json().contains("timing"));
    }
}
