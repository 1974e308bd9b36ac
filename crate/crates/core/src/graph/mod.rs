//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one `u64` row per vertex, which caps graphs at
//! [`MAX_VERTICES`] vertices. Every other module in the crate works on this
//! representation.

mod connectivity;
mod families;
mod graph6;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use connectivity::vertex_connectivity;
pub use families::{generate_family, icosahedron_faces, Family};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};

/// Largest vertex count representable (single-byte graph6 size form).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family parameter: {0}")]
    BadParameter(String),
    #[error("vertex connectivity is undefined for graphs with fewer than 2 vertices")]
    ConnectivityUndefined,
}

/// An undirected edge, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the normalized edge `{a, b}`. Returns `None` for a loop.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    /// Bitmask of both endpoints.
    pub fn mask(self) -> u64 {
        (1u64 << self.u) | (1u64 << self.v)
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint opposite `w`.
    pub fn other(self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(deserializer)?;
        Edge::new(a, b).ok_or_else(|| serde::de::Error::custom("edge endpoints must differ"))
    }
}

/// Simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Rows must be symmetric,
    /// loop-free and confined to `0..rows.len()`.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..adj.len())
            .all(|u| (0..adj.len()).all(|v| (adj[u] >> v & 1) == (adj[v] >> u & 1))));
        Graph { n: adj.len(), adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Vertices reachable from the lowest vertex of `alive` inside `alive`.
    pub(crate) fn component_mask(&self, alive: u64) -> u64 {
        if alive == 0 {
            return 0;
        }
        let start = alive & alive.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= alive & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connectivity of the subgraph induced on `alive`. Empty sets count as
    /// disconnected.
    pub(crate) fn is_connected_within(&self, alive: u64) -> bool {
        alive != 0 && self.component_mask(alive) == alive
    }

    /// Graph search connectivity. The null graph is reported disconnected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            connected: self.is_connected(),
            min_degree: self.min_degree(),
            degrees: self.degrees(),
        }
    }

    /// Subgraph induced on the vertices of `mask`, relabeled in increasing
    /// order. The second value maps new labels to old ones.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut rows = vec![0u64; labels.len()];
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate() {
                if self.adj[a] >> b & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        (Graph::from_rows(rows), labels)
    }

    /// G[N(v)] with its label map back into `self`.
    pub fn neighborhood_subgraph(&self, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.induced_subgraph(self.adj[v]))
    }

    /// Copy of the graph with vertices renamed by `perm` (old `v` becomes
    /// `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub connected: bool,
    pub min_degree: usize,
    pub degrees: Vec<usize>,
}

pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates set bit positions of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
