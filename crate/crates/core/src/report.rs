//! Check results and the sinks that checkers stream instances into.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// Default number of witnesses kept per report.
pub const DEFAULT_WITNESS_CAP: usize = 16;

/// One falsifying instance: the law that failed and the quantified variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub law: String,
}

/// Outcome of a universally quantified check.
///
/// `witnesses` holds the lexicographically smallest failures (by tuple, then
/// law), truncated to the cap; `witness_total` is the exact failure count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub witness_total: u64,
    pub checked_count: u64,
    pub skipped_count: u64,
}

impl CheckReport {
    /// A report with nothing quantified over.
    pub fn vacuous(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            witnesses: Vec::new(),
            witness_total: 0,
            checked_count: 0,
            skipped_count: 0,
        }
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn has_witness(&self, law: &str, tuple: &[usize]) -> bool {
        self.witnesses.iter().any(|w| w.law == law && w.tuple == tuple)
    }

    pub fn has_tuple(&self, tuple: &[usize]) -> bool {
        self.witnesses.iter().any(|w| w.tuple == tuple)
    }
}

/// Receives evaluated instances of a law.
///
/// `Some(true)` holds, `Some(false)` is a counterexample, `None` means some
/// operation on the way was undefined and the instance is skipped.
pub(crate) trait Sink {
    fn record(&mut self, law: &'static str, tuple: &[usize], outcome: Option<bool>);

    /// Whether the checker may stop early.
    fn done(&self) -> bool {
        false
    }
}

/// Builds a [`CheckReport`].
pub(crate) struct Collector {
    cap: usize,
    witnesses: BTreeSet<Witness>,
    total: u64,
    checked: u64,
    skipped: u64,
}

impl Collector {
    pub(crate) fn new(cap: usize) -> Self {
        Collector {
            cap,
            witnesses: BTreeSet::new(),
            total: 0,
            checked: 0,
            skipped: 0,
        }
    }

    pub(crate) fn fail(&mut self, law: &str, tuple: &[usize]) {
        self.checked += 1;
        self.total += 1;
        let w = Witness {
            tuple: tuple.to_vec(),
            law: law.to_string(),
        };
        if self.witnesses.len() < self.cap {
            self.witnesses.insert(w);
        } else if self.witnesses.last().is_some_and(|last| &w < last) {
            self.witnesses.insert(w);
            self.witnesses.pop_last();
        }
    }

    pub(crate) fn checked_many(&mut self, count: u64) {
        self.checked += count;
    }

    pub(crate) fn finish(self, name: &str) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            passed: self.total == 0,
            witnesses: self.witnesses.into_iter().collect(),
            witness_total: self.total,
            checked_count: self.checked,
            skipped_count: self.skipped,
        }
    }
}

impl Sink for Collector {
    fn record(&mut self, law: &'static str, tuple: &[usize], outcome: Option<bool>) {
        match outcome {
            Some(true) => self.checked += 1,
            Some(false) => self.fail(law, tuple),
            None => self.skipped += 1,
        }
    }
}

/// Stops at the first counterexample. Used for pruning during search.
#[derive(Default)]
pub(crate) struct FailFast {
    pub(crate) failed: bool,
}

impl Sink for FailFast {
    fn record(&mut self, _law: &'static str, _tuple: &[usize], outcome: Option<bool>) {
        if outcome == Some(false) {
            self.failed = true;
        }
    }

    fn done(&self) -> bool {
        self.failed
    }
}
