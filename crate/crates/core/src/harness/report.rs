use std::fmt::Write as _;

use serde::Serialize;

/// How one graph fared on one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckOutcome {
    /// The query behind the check does not apply to the graph.
    NotApplicable,
    Holds,
    Fails,
    /// Settled by a cheap necessary condition without running the query.
    Filtered,
    /// A search budget ran out before the check could be evaluated.
    Skipped,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub check: String,
    pub graphs: usize,
    pub not_applicable: usize,
    pub holds: usize,
    pub fails: usize,
    pub filtered: usize,
    pub skipped: usize,
}

impl CheckCounts {
    fn record(&mut self, outcome: CheckOutcome) {
        self.graphs += 1;
        match outcome {
            CheckOutcome::NotApplicable => self.not_applicable += 1,
            CheckOutcome::Holds => self.holds += 1,
            CheckOutcome::Fails => self.fails += 1,
            CheckOutcome::Filtered => self.filtered += 1,
            CheckOutcome::Skipped => self.skipped += 1,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.not_applicable + self.holds + self.fails + self.filtered + self.skipped == self.graphs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

/// Everything one graph contributed to a scan.
#[derive(Debug, Clone, Default)]
pub(crate) struct GraphOutcome {
    pub outcomes: Vec<CheckOutcome>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub corpus: String,
    pub corpus_size: usize,
    pub checks: Vec<CheckCounts>,
    pub violations: Vec<Violation>,
    /// Budget and skip annotations, in corpus order.
    pub notes: Vec<String>,
}

impl ScanReport {
    pub(crate) fn new(corpus: impl Into<String>, check_ids: &[String]) -> Self {
        ScanReport {
            corpus: corpus.into(),
            corpus_size: 0,
            checks: check_ids
                .iter()
                .map(|c| CheckCounts { check: c.clone(), ..Default::default() })
                .collect(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Folds in one graph's results; outcomes are in check order.
    pub(crate) fn absorb(&mut self, graph: GraphOutcome) {
        assert_eq!(graph.outcomes.len(), self.checks.len());
        self.corpus_size += 1;
        for (counts, outcome) in self.checks.iter_mut().zip(graph.outcomes) {
            counts.record(outcome);
        }
        self.violations.extend(graph.violations);
        self.notes.extend(graph.notes);
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn counts(&self, check: &str) -> Option<&CheckCounts> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "corpus: {} ({} graphs)", self.corpus, self.corpus_size).unwrap();
        let width = self.checks.iter().map(|c| c.check.len()).max().unwrap_or(5).max(5);
        writeln!(
            out,
            "{:<width$}  {:>7}  {:>7}  {:>7}  {:>7}  {:>8}  {:>7}",
            "check", "graphs", "n/a", "holds", "fails", "filtered", "skipped"
        )
        .unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "{:<width$}  {:>7}  {:>7}  {:>7}  {:>7}  {:>8}  {:>7}",
                c.check, c.graphs, c.not_applicable, c.holds, c.fails, c.filtered, c.skipped
            )
            .unwrap();
        }
        writeln!(out, "violations: {}", self.violations.len()).unwrap();
        for v in &self.violations {
            writeln!(out, "  {}  {}  {}", v.graph6, v.check, v.detail).unwrap();
        }
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        out
    }
}
