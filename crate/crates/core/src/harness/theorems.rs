//! Surface-dependent upper bounds on extendability, checked per embedding.

use rayon::prelude::*;

use super::report::GraphOutcome;
use super::{audit, outcome_of, violation, CheckOutcome, Corpus, Entry, ScanReport, Verdicts};
use crate::embedding::{
    embeds_on_surface, euler_report, exhaustive_genus, triangular_corner_count, CombinatorialMap,
    EmbeddingError, SearchBudget,
};
use crate::graph::{write_graph6, Graph};
use crate::matching::EmnQuery;
use crate::surfaces::{Surface, SurfaceKind};
use crate::EulerReport;

/// Where graphs without a supplied map get embedded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceChoice {
    /// A minimum-genus embedding of the given kind.
    Minimal(SurfaceKind),
    /// Any embedding on this surface or a simpler one of the same kind;
    /// graphs with none are not applicable.
    AtMost(Surface),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremConfig {
    pub surface: SurfaceChoice,
    pub budget: SearchBudget,
    /// Threshold checks run for 4 ≤ k ≤ `max_k`.
    pub max_k: i64,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        TheoremConfig {
            surface: SurfaceChoice::Minimal(SurfaceKind::Orientable),
            budget: SearchBudget::default(),
            max_k: 6,
        }
    }
}

const MU_CHECK: &str = "mu-bound E(mu-1,1)";
const CONTROL_CHECK: &str = "control-points E(m,1)";

fn threshold_check(k: i64) -> String {
    format!("threshold E({},1)", k - 1)
}

fn check_ids(config: &TheoremConfig) -> Vec<String> {
    let mut ids = vec![MU_CHECK.to_string()];
    ids.extend((4..=config.max_k).map(threshold_check));
    ids.push(CONTROL_CHECK.to_string());
    ids
}

enum Embedded {
    Map(CombinatorialMap),
    Absent,
    OverBudget(String),
}

fn embed(entry: &Entry, config: &TheoremConfig) -> Embedded {
    if let Some(map) = &entry.map {
        return Embedded::Map(map.clone());
    }
    let g = &entry.graph;
    let found = match config.surface {
        SurfaceChoice::Minimal(kind) => exhaustive_genus(g, kind, config.budget).map(|r| Some(r.witness)),
        SurfaceChoice::AtMost(surface) => embeds_on_surface(g, surface, config.budget),
    };
    match found {
        Ok(Some(map)) => Embedded::Map(map),
        Ok(None) => Embedded::Absent,
        Err(e @ (EmbeddingError::SearchTooLarge { .. } | EmbeddingError::Timeout { .. })) => {
            Embedded::OverBudget(e.to_string())
        }
        Err(_) => Embedded::Absent,
    }
}

/// Decides E(m,1) unless applicability or the minimum-degree condition
/// already settles that it cannot hold. A Holds verdict is a violation.
fn must_not_hold(
    g: &Graph,
    verdicts: &mut Verdicts,
    m: usize,
    check: &str,
    context: &str,
    out: &mut GraphOutcome,
) -> CheckOutcome {
    let q = EmnQuery::new(m, 1);
    if q.inapplicable(g).is_some() {
        return CheckOutcome::NotApplicable;
    }
    if g.min_degree() < m + 2 {
        return CheckOutcome::Filtered;
    }
    let v = verdicts.get(m, 1).clone();
    if v.holds() {
        out.violations.push(violation(g, check, format!("{q} holds; {context}")));
    }
    out.violations.extend(audit(g, q, &v, check));
    outcome_of(&v)
}

fn combine(a: CheckOutcome, b: CheckOutcome) -> CheckOutcome {
    use CheckOutcome::*;
    let rank = |o| match o {
        NotApplicable => 0,
        Filtered => 1,
        Fails => 2,
        Skipped => 3,
        Holds => 4,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn scan_entry(entry: &Entry, config: &TheoremConfig, n_checks: usize) -> GraphOutcome {
    let g = &entry.graph;
    let mut out = GraphOutcome::default();
    let map = match embed(entry, config) {
        Embedded::Map(map) => map,
        Embedded::Absent => {
            out.outcomes = vec![CheckOutcome::NotApplicable; n_checks];
            return out;
        }
        Embedded::OverBudget(why) => {
            out.outcomes = vec![CheckOutcome::Skipped; n_checks];
            out.notes.push(format!("{} skipped: {why}", write_graph6(g)));
            return out;
        }
    };
    let report: EulerReport = match euler_report(&map) {
        Ok(r) => r,
        Err(e) => {
            out.outcomes = vec![CheckOutcome::Skipped; n_checks];
            out.notes.push(format!("{} skipped: {e}", write_graph6(g)));
            return out;
        }
    };
    let surface = report.surface();
    let mut verdicts = Verdicts::new(g);

    let mu = surface.mu();
    let context = format!("embedded on {surface}, mu = {mu}");
    let o = must_not_hold(g, &mut verdicts, (mu - 1) as usize, MU_CHECK, &context, &mut out);
    out.outcomes.push(o);

    for k in 4..=config.max_k {
        let id = threshold_check(k);
        let threshold = surface.theorem2_threshold(k).expect("k >= 4");
        let o = if (g.vertex_count() as i64) < threshold {
            CheckOutcome::NotApplicable
        } else {
            let context = format!("{} vertices on {surface}, threshold {threshold}", g.vertex_count());
            must_not_hold(g, &mut verdicts, (k - 1) as usize, &id, &context, &mut out)
        };
        out.outcomes.push(o);
    }

    if report.control_points.is_empty() {
        out.violations.push(violation(g, CONTROL_CHECK, "no control point"));
    }
    let mut agg = CheckOutcome::NotApplicable;
    for &v in &report.control_points {
        let (x, y) = triangular_corner_count(&map, v).expect("v is a vertex");
        // y − ⌈x/2⌉, which is ⌊x/2⌋ when x = y is odd.
        let m = y - x.div_ceil(2);
        let context = format!("control point {v} with (x,y) = ({x},{y}) on {surface}");
        let o = must_not_hold(g, &mut verdicts, m, CONTROL_CHECK, &context, &mut out);
        agg = combine(agg, o);
    }
    out.outcomes.push(agg);
    out
}

/// Embeds each graph (or takes its supplied map) and checks that it is not
/// E(μ(Σ)−1,1), not E(k−1,1) above the size thresholds, and not E(m,1) at
/// any control point with m derived from its triangular corners.
pub fn run_theorem_suite(corpus: &Corpus, config: &TheoremConfig) -> ScanReport {
    let ids = check_ids(config);
    let surface = match config.surface {
        SurfaceChoice::Minimal(kind) => format!("supplied maps, else minimal {kind} embedding"),
        SurfaceChoice::AtMost(s) => format!("supplied maps, else embeddings on {s} or simpler"),
    };
    let mut report =
        ScanReport::new(format!("{}; {surface}; 4 <= k <= {}", corpus.description, config.max_k), &ids);
    let per_graph: Vec<GraphOutcome> =
        corpus.entries.par_iter().map(|e| scan_entry(e, config, ids.len())).collect();
    for g in per_graph {
        report.absorb(g);
    }
    report
}
