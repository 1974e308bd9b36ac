//! Matchings, constrained perfect matchings and the E(m,n) decision.

mod blossom;
mod emn;
mod enumerate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub use emn::{has_property_emn, EmnQuery, EmnVerdict, NotApplicableReason, Witness};
pub use enumerate::{perfect_matchings, verify_witness};

pub(crate) use blossom::has_perfect_matching;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edges {0} and {1} share a vertex, so they do not form a matching")]
    NotAMatching(Edge, Edge),
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("edge {0} is both forced and forbidden")]
    ForcedForbiddenOverlap(Edge),
}

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Result<Self, MatchingError> {
        edges.sort_unstable();
        edges.dedup();
        let mut seen = 0u64;
        for (i, e) in edges.iter().enumerate() {
            if seen & e.mask() != 0 {
                let clash = edges[..i]
                    .iter()
                    .find(|f| f.mask() & e.mask() != 0)
                    .copied()
                    .unwrap_or(*e);
                return Err(MatchingError::NotAMatching(clash, *e));
            }
            seen |= e.mask();
        }
        Ok(Matching { edges })
    }

    /// Convenience constructor from vertex pairs. Panics on loops.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self, MatchingError> {
        Self::new(
            pairs
                .into_iter()
                .map(|(a, b)| Edge::new(a, b).expect("matching edge is a loop"))
                .collect(),
        )
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching.
    pub fn covered(&self) -> u64 {
        self.edges.iter().fold(0, |acc, e| acc | e.mask())
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Errors with the first edge missing from `g`.
    pub fn check_in(&self, g: &Graph) -> Result<(), MatchingError> {
        match self.edges.iter().find(|e| !g.contains_edge(**e)) {
            Some(e) => Err(MatchingError::EdgeNotInGraph(*e)),
            None => Ok(()),
        }
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.check_in(g).is_ok() && self.covered() == g.vertex_mask()
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = MatchingError;

    fn try_from(edges: Vec<Edge>) -> Result<Self, Self::Error> {
        Matching::new(edges)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges
    }
}

fn mates_to_matching(mates: &[usize]) -> Matching {
    let edges = mates
        .iter()
        .enumerate()
        .filter(|&(v, &u)| !blossom::is_none(u) && v < u)
        .map(|(v, &u)| Edge::new(v, u).unwrap())
        .collect();
    Matching::from_sorted_unchecked(edges)
}

/// A maximum-cardinality matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    mates_to_matching(&blossom::maximum_matching_mates(g.rows(), g.vertex_mask()))
}

/// ν(G), the maximum matching size.
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).len()
}

/// A perfect matching containing `forced` and disjoint from `forbidden`, if
/// one exists.
///
/// Deletes the vertices covered by `forced` and the `forbidden` edges, then
/// decides perfect matching on what is left.
pub fn constrained_perfect_matching(
    g: &Graph,
    forced: &Matching,
    forbidden: &[Edge],
) -> Result<Option<Matching>, MatchingError> {
    forced.check_in(g)?;
    for &e in forbidden {
        if !g.contains_edge(e) {
            return Err(MatchingError::EdgeNotInGraph(e));
        }
        if forced.contains(e) {
            return Err(MatchingError::ForcedForbiddenOverlap(e));
        }
    }

    let alive = g.vertex_mask() & !forced.covered();
    let rows = rows_without(g, forbidden);
    if !has_perfect_matching(&rows, alive) {
        return Ok(None);
    }
    let mates = blossom::maximum_matching_mates(&rows, alive);
    let mut edges: Vec<Edge> = mates_to_matching(&mates).edges;
    edges.extend_from_slice(forced.edges());
    let f = Matching::new(edges).expect("forced edges are disjoint from the completion");
    debug_assert!(f.covered() == g.vertex_mask());
    Ok(Some(f))
}

pub(crate) fn rows_without(g: &Graph, removed: &[Edge]) -> Vec<u64> {
    let mut rows = g.rows().to_vec();
    for e in removed {
        rows[e.u()] &= !(1 << e.v());
        rows[e.v()] &= !(1 << e.u());
    }
    rows
}
