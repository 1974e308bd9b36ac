use std::fmt;

use serde::{Deserialize, Serialize};

use super::{has_perfect_matching, matching_number, Matching};
use crate::graph::{Edge, Graph};

/// Sizes of the forced (`m`) and forbidden (`n`) matchings. E(m,0) is
/// m-extendability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EmnQuery {
    pub m: usize,
    pub n: usize,
}

impl EmnQuery {
    pub fn new(m: usize, n: usize) -> Self {
        EmnQuery { m, n }
    }

    /// Smallest vertex count for which the property is defined.
    pub fn min_vertices(self) -> usize {
        2 * self.m + 2 * self.n + 2
    }

    /// Why the property does not apply to `g`, if it does not.
    pub fn inapplicable(self, g: &Graph) -> Option<NotApplicableReason> {
        if !g.is_connected() {
            Some(NotApplicableReason::Disconnected)
        } else if g.vertex_count() % 2 == 1 {
            Some(NotApplicableReason::OddVertexCount)
        } else if g.vertex_count() < self.min_vertices() {
            Some(NotApplicableReason::TooFewVertices)
        } else if !has_perfect_matching(g.rows(), g.vertex_mask())
            && matching_number(g) < self.m + self.n
        {
            // No pair (M, N) exists to quantify over.
            Some(NotApplicableReason::NoMatchingPair)
        } else {
            None
        }
    }
}

impl fmt::Display for EmnQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NotApplicableReason {
    #[serde(rename = "disconnected")]
    Disconnected,
    #[serde(rename = "too few vertices")]
    TooFewVertices,
    #[serde(rename = "odd vertex count")]
    OddVertexCount,
    #[serde(rename = "no matching pair")]
    NoMatchingPair,
}

impl fmt::Display for NotApplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotApplicableReason::Disconnected => "disconnected",
            NotApplicableReason::TooFewVertices => "too few vertices",
            NotApplicableReason::OddVertexCount => "odd vertex count",
            NotApplicableReason::NoMatchingPair => "no matching pair",
        })
    }
}

/// A pair (M, N) such that no perfect matching contains M and avoids N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub m: Matching,
    pub n: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum EmnVerdict {
    Holds,
    Fails { witness: Witness },
    NotApplicable { reason: NotApplicableReason },
}

impl EmnVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, EmnVerdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, EmnVerdict::Fails { .. })
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, EmnVerdict::NotApplicable { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            EmnVerdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn outcome_name(&self) -> &'static str {
        match self {
            EmnVerdict::Holds => "Holds",
            EmnVerdict::Fails { .. } => "Fails",
            EmnVerdict::NotApplicable { .. } => "NotApplicable",
        }
    }
}

/// Decides property E(m,n) for `g`.
///
/// Enumerates forced matchings M of size `m` in lexicographic edge order and,
/// for each, forbidden matchings N of size `n` vertex-disjoint from M. The
/// first pair with no admissible perfect matching is returned as the witness.
pub fn has_property_emn(g: &Graph, q: EmnQuery) -> EmnVerdict {
    if let Some(reason) = q.inapplicable(g) {
        return EmnVerdict::NotApplicable { reason };
    }
    let edges = g.edges();
    let mut search = Search {
        rows: g.rows().to_vec(),
        edges: &edges,
        all: g.vertex_mask(),
        forced: Vec::with_capacity(q.m),
        forbidden: Vec::with_capacity(q.n),
        m: q.m,
        n: q.n,
    };
    match search.choose_forced(0, 0) {
        Some(witness) => EmnVerdict::Fails { witness },
        None => EmnVerdict::Holds,
    }
}

struct Search<'a> {
    /// Adjacency with the current forbidden edges removed.
    rows: Vec<u64>,
    edges: &'a [Edge],
    all: u64,
    forced: Vec<Edge>,
    forbidden: Vec<Edge>,
    m: usize,
    n: usize,
}

impl Search<'_> {
    fn choose_forced(&mut self, start: usize, used: u64) -> Option<Witness> {
        if self.forced.len() == self.m {
            let alive = self.all & !used;
            return self.choose_forbidden(0, used, alive);
        }
        let need = self.m - self.forced.len();
        for i in start..self.edges.len() {
            if self.edges.len() - i < need {
                break;
            }
            let e = self.edges[i];
            if used & e.mask() != 0 {
                continue;
            }
            self.forced.push(e);
            let found = self.choose_forced(i + 1, used | e.mask());
            self.forced.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn choose_forbidden(&mut self, start: usize, used: u64, alive: u64) -> Option<Witness> {
        if self.forbidden.len() == self.n {
            if has_perfect_matching(&self.rows, alive) {
                return None;
            }
            return Some(Witness {
                m: Matching::from_sorted_unchecked(self.forced.clone()),
                n: Matching::from_sorted_unchecked(self.forbidden.clone()),
            });
        }
        let need = self.n - self.forbidden.len();
        for i in start..self.edges.len() {
            if self.edges.len() - i < need {
                break;
            }
            let e = self.edges[i];
            if used & e.mask() != 0 {
                continue;
            }
            self.forbidden.push(e);
            self.rows[e.u()] &= !(1 << e.v());
            self.rows[e.v()] &= !(1 << e.u());
            let found = self.choose_forbidden(i + 1, used | e.mask(), alive);
            self.rows[e.u()] |= 1 << e.v();
            self.rows[e.v()] |= 1 << e.u();
            self.forbidden.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}
