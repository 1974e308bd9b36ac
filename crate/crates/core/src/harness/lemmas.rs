//! Consistency of E(m,n) verdicts with the structural lemmas.

use rayon::prelude::*;

use super::report::GraphOutcome;
use super::{audit, outcome_of, violation, CheckOutcome, Corpus, ScanReport, Verdicts};
use crate::graph::{vertex_connectivity, Graph};
use crate::matching::{matching_number, EmnQuery};

#[derive(Debug, Clone, Copy)]
enum Check {
    /// Every Fails witness passes the brute-force audit.
    Witness(usize, usize),
    /// E(m,0) ⇒ (m+1)-connected.
    Connectivity(usize),
    /// E(m,0), deg(v) = m+t ⇒ the neighborhood of v has no matching of size t.
    Neighborhood(usize),
    /// E(m,n) ⇒ not Fails E(m,0).
    DropForbidden(usize, usize),
    /// E(m,n) ⇒ not Fails E(m−1,n).
    ShrinkForced(usize, usize),
    /// E(m,0) ⇒ not Fails E(m−1,1).
    TradeForced(usize),
    /// E(m,1) ⇒ δ ≥ m+2.
    MinDegree(usize),
}

impl Check {
    fn id(self) -> String {
        match self {
            Check::Witness(m, n) => format!("witness E({m},{n})"),
            Check::Connectivity(m) => format!("connectivity E({m},0)"),
            Check::Neighborhood(m) => format!("neighborhood E({m},0)"),
            Check::DropForbidden(m, n) => format!("drop-forbidden E({m},{n})"),
            Check::ShrinkForced(m, n) => format!("shrink-forced E({m},{n})"),
            Check::TradeForced(m) => format!("trade-forced E({m},0)"),
            Check::MinDegree(m) => format!("min-degree E({m},1)"),
        }
    }

    fn premise(self) -> (usize, usize) {
        match self {
            Check::Witness(m, n) | Check::DropForbidden(m, n) | Check::ShrinkForced(m, n) => (m, n),
            Check::Connectivity(m) | Check::Neighborhood(m) | Check::TradeForced(m) => (m, 0),
            Check::MinDegree(m) => (m, 1),
        }
    }

    /// What the premise implies, given that it holds. `None` means fine.
    fn conclusion(self, g: &Graph, verdicts: &mut Verdicts) -> Option<String> {
        let not_fails = |verdicts: &mut Verdicts, m, n| {
            verdicts.get(m, n).fails().then(|| format!("premise holds but E({m},{n}) fails"))
        };
        match self {
            Check::Witness(..) => None,
            Check::Connectivity(m) => {
                let k = vertex_connectivity(g).expect("applicable graphs have at least 2 vertices");
                (k < m + 1).then(|| format!("connectivity {k} < {}", m + 1))
            }
            Check::Neighborhood(m) => (0..g.vertex_count()).find_map(|v| {
                let deg = g.degree(v);
                let (nbhd, _) = g.neighborhood_subgraph(v).expect("v is a vertex");
                let nu = matching_number(&nbhd);
                (nu + m >= deg).then(|| {
                    format!("vertex {v}: degree {deg}, neighborhood matching number {nu}")
                })
            }),
            Check::DropForbidden(m, _) => not_fails(verdicts, m, 0),
            Check::ShrinkForced(m, n) => not_fails(verdicts, m - 1, n),
            Check::TradeForced(m) => not_fails(verdicts, m - 1, 1),
            Check::MinDegree(m) => {
                let delta = g.min_degree();
                (delta < m + 2).then(|| format!("minimum degree {delta} < {}", m + 2))
            }
        }
    }
}

fn checks(max_m: usize, max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            out.push(Check::Witness(m, n));
        }
    }
    out.extend((0..=max_m).map(Check::Connectivity));
    out.extend((0..=max_m).map(Check::Neighborhood));
    for m in 0..=max_m {
        for n in 1..=max_n {
            out.push(Check::DropForbidden(m, n));
        }
    }
    for m in 1..=max_m {
        for n in 0..=max_n {
            out.push(Check::ShrinkForced(m, n));
        }
    }
    out.extend((1..=max_m).map(Check::TradeForced));
    if max_n >= 1 {
        out.extend((1..=max_m).map(Check::MinDegree));
    }
    out
}

fn scan_graph(g: &Graph, checks: &[Check]) -> GraphOutcome {
    let mut verdicts = Verdicts::new(g);
    let mut result = GraphOutcome::default();
    for &check in checks {
        let id = check.id();
        let (m, n) = check.premise();
        let premise = verdicts.get(m, n).clone();
        if let Some(v) = audit(g, EmnQuery::new(m, n), &premise, &id) {
            result.violations.push(v);
        }
        let outcome = outcome_of(&premise);
        if outcome == CheckOutcome::Holds {
            if let Some(detail) = check.conclusion(g, &mut verdicts) {
                result.violations.push(violation(g, &id, detail));
            }
        }
        result.outcomes.push(outcome);
    }
    result
}

/// Decides E(m,n) for every m ≤ `max_m`, n ≤ `max_n` on each graph and
/// checks the implications between the verdicts, connectivity, minimum
/// degree and neighborhood matchings. Witnesses are audited by brute force.
pub fn run_lemma_suite(corpus: &Corpus, max_m: usize, max_n: usize) -> ScanReport {
    let checks = checks(max_m, max_n);
    let ids: Vec<String> = checks.iter().map(|c| c.id()).collect();
    let description = format!("{}; m <= {max_m}, n <= {max_n}", corpus.description);
    let mut report = ScanReport::new(description, &ids);
    let per_graph: Vec<GraphOutcome> =
        corpus.entries.par_iter().map(|e| scan_graph(&e.graph, &checks)).collect();
    for g in per_graph {
        report.absorb(g);
    }
    report
}
