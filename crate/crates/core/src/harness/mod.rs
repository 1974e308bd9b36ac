//! Corpus generation and the consistency scans run over it.

mod canon;
mod lemmas;
mod report;
mod theorems;

use std::collections::HashMap;

use thiserror::Error;

use crate::embedding::CombinatorialMap;
use crate::graph::{parse_graph6_lines, write_graph6, Graph};
use crate::matching::{has_property_emn, verify_witness, EmnQuery, EmnVerdict};

pub use canon::{
    canonical_form, enumerate_connected_graphs, CanonicalForm, MAX_CANONICAL_VERTICES,
    MAX_ENUMERATION_VERTICES,
};
pub use lemmas::run_lemma_suite;
pub use report::{CheckCounts, CheckOutcome, ScanReport, Violation};
pub use theorems::{run_theorem_suite, SurfaceChoice, TheoremConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("canonical forms are limited to {MAX_CANONICAL_VERTICES} vertices, got {0}")]
    CanonicalTooLarge(usize),
    #[error(
        "built-in enumeration stops at {MAX_ENUMERATION_VERTICES} vertices, got {0}; \
         feed larger graphs in as a graph6 file instead"
    )]
    EnumerationTooLarge(usize),
    #[error("line {line}: {message}")]
    Graph6 { line: usize, message: String },
}

/// A graph, optionally with a fixed embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub graph: Graph,
    pub map: Option<CombinatorialMap>,
}

/// Graphs to scan, with a description that ends up in the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub description: String,
    pub entries: Vec<Entry>,
}

impl Corpus {
    pub fn new(description: impl Into<String>, graphs: impl IntoIterator<Item = Graph>) -> Self {
        Corpus {
            description: description.into(),
            entries: graphs.into_iter().map(|graph| Entry { graph, map: None }).collect(),
        }
    }

    pub fn with_maps(
        description: impl Into<String>,
        maps: impl IntoIterator<Item = CombinatorialMap>,
    ) -> Self {
        Corpus {
            description: description.into(),
            entries: maps
                .into_iter()
                .map(|map| Entry { graph: map.graph().clone(), map: Some(map) })
                .collect(),
        }
    }

    /// All connected graphs on `lo..=hi` vertices, optionally with δ ≥ `min_degree`.
    pub fn enumerated(lo: usize, hi: usize, min_degree: Option<usize>) -> Result<Self, HarnessError> {
        let mut graphs = Vec::new();
        for n in lo..=hi {
            graphs.extend(enumerate_connected_graphs(n, min_degree)?);
        }
        let degree = min_degree.map(|d| format!(", min degree {d}")).unwrap_or_default();
        Ok(Corpus::new(format!("connected graphs on {lo}..={hi} vertices{degree}"), graphs))
    }

    pub fn from_graph6(description: impl Into<String>, text: &str) -> Result<Self, HarnessError> {
        let graphs = parse_graph6_lines(text)
            .map_err(|(line, e)| HarnessError::Graph6 { line, message: e.to_string() })?;
        Ok(Corpus::new(description, graphs))
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Per-graph cache of E(m,n) verdicts.
pub(crate) struct Verdicts<'a> {
    graph: &'a Graph,
    cache: HashMap<(usize, usize), EmnVerdict>,
}

impl<'a> Verdicts<'a> {
    pub(crate) fn new(graph: &'a Graph) -> Self {
        Verdicts { graph, cache: HashMap::new() }
    }

    pub(crate) fn get(&mut self, m: usize, n: usize) -> &EmnVerdict {
        let g = self.graph;
        self.cache.entry((m, n)).or_insert_with(|| has_property_emn(g, EmnQuery::new(m, n)))
    }
}

pub(crate) fn outcome_of(v: &EmnVerdict) -> CheckOutcome {
    match v {
        EmnVerdict::Holds => CheckOutcome::Holds,
        EmnVerdict::Fails { .. } => CheckOutcome::Fails,
        EmnVerdict::NotApplicable { .. } => CheckOutcome::NotApplicable,
    }
}

pub(crate) fn violation(g: &Graph, check: &str, detail: impl Into<String>) -> Violation {
    Violation { graph6: write_graph6(g), check: check.to_string(), detail: detail.into() }
}

/// Re-checks a Fails verdict by brute force; returns a violation if the
/// witness does not hold up.
pub(crate) fn audit(g: &Graph, q: EmnQuery, v: &EmnVerdict, check: &str) -> Option<Violation> {
    let w = v.witness()?;
    if w.m.len() != q.m || w.n.len() != q.n {
        return Some(violation(g, check, format!("{q} witness has wrong sizes")));
    }
    match verify_witness(g, &w.m, &w.n) {
        Ok(true) => None,
        Ok(false) => Some(violation(g, check, format!("{q} witness is extendable"))),
        Err(e) => Some(violation(g, check, format!("{q} witness is malformed: {e}"))),
    }
}
