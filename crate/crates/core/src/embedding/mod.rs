//! Graph embeddings as signed rotation systems.
//!
//! A [`CombinatorialMap`] stores, for every vertex, the clockwise cyclic order
//! of its neighbors, plus the set of edges carrying sign −1. Every such map is
//! a 2-cell embedding of the graph on a unique closed surface, which is
//! recovered by tracing faces.

mod euler;
mod faces;
mod genus;
mod rot;

use thiserror::Error;

use crate::graph::{bits, Edge, Graph};

pub use euler::{euler_contribution, euler_report, triangular_corner_count, EulerReport};
pub use faces::{is_orientable_map, trace_faces, Face, FaceSet};
pub use genus::{
    embeds_on_surface, euler_genus_lower_bound, exhaustive_genus, search_space_size, GenusResult,
    SearchBudget,
};
pub use rot::{parse_rot, write_rot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("embedding requires a connected graph")]
    Disconnected,
    #[error("embedding requires at least one edge")]
    NoEdges,
    #[error("invalid rotation at vertex {vertex}: {message}")]
    InvalidRotation { vertex: usize, message: String },
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("exact arithmetic overflowed the chosen scalar type")]
    ArithmeticOverflow,
    #[error(
        "search budget exhausted after {explored} rotation assignments \
         (full search space {space}{})",
        if *.saturated { "+" } else { "" }
    )]
    SearchTooLarge { space: u128, saturated: bool, explored: u64 },
    #[error("search timed out after {explored} rotation assignments")]
    Timeout { explored: u64 },
    #[error("graph has no cycle, so it has no non-orientable 2-cell embedding")]
    NoNonOrientableEmbedding,
    #[error("rotation file line {line}: {message}")]
    RotParse { line: usize, message: String },
}

/// A rotation system with edge signs.
#[derive(Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    /// Adjacency rows of the edges with sign −1.
    negative: Vec<u64>,
}

impl CombinatorialMap {
    /// Validates that `rotation[v]` lists each neighbor of `v` exactly once
    /// and that every negative edge exists.
    pub fn new(
        graph: Graph,
        rotation: Vec<Vec<usize>>,
        negative_edges: &[Edge],
    ) -> Result<Self, EmbeddingError> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(EmbeddingError::InvalidRotation {
                vertex: rotation.len().min(n),
                message: format!("expected {n} rotation lists, got {}", rotation.len()),
            });
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut seen = 0u64;
            for &u in order {
                if u >= n || !graph.has_edge(v, u) {
                    return Err(EmbeddingError::InvalidRotation {
                        vertex: v,
                        message: format!("{u} is not a neighbor"),
                    });
                }
                if seen >> u & 1 == 1 {
                    return Err(EmbeddingError::InvalidRotation {
                        vertex: v,
                        message: format!("{u} listed twice"),
                    });
                }
                seen |= 1 << u;
            }
            if seen != graph.neighbor_mask(v) {
                let missing = bits(graph.neighbor_mask(v) & !seen).next().unwrap();
                return Err(EmbeddingError::InvalidRotation {
                    vertex: v,
                    message: format!("neighbor {missing} missing"),
                });
            }
        }
        let mut negative = vec![0u64; n];
        for &e in negative_edges {
            if !graph.contains_edge(e) {
                return Err(EmbeddingError::EdgeNotInGraph(e));
            }
            negative[e.u()] |= 1 << e.v();
            negative[e.v()] |= 1 << e.u();
        }
        Ok(CombinatorialMap { graph, rotation, negative })
    }

    /// All-positive map whose rotation at each vertex is its neighbors in
    /// increasing order.
    pub fn natural(graph: Graph) -> Self {
        let rotation = (0..graph.vertex_count()).map(|v| graph.neighbors(v).collect()).collect();
        CombinatorialMap::new(graph, rotation, &[]).expect("sorted neighbor lists are rotations")
    }

    /// Orientable map from consistently oriented facial walks. Each walk
    /// `(.., a, b, c, ..)` makes `c` follow `a` in the rotation at `b`.
    pub fn from_oriented_faces(graph: Graph, faces: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let n = graph.vertex_count();
        let mut next = vec![vec![usize::MAX; n]; n];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                if a >= n || b >= n || c >= n {
                    return Err(EmbeddingError::VertexOutOfRange { vertex: a.max(b).max(c), n });
                }
                if next[b][a] != usize::MAX {
                    return Err(EmbeddingError::InvalidRotation {
                        vertex: b,
                        message: format!("corner after {a} assigned twice"),
                    });
                }
                next[b][a] = c;
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let Some(first) = graph.neighbors(v).next() else {
                rotation.push(Vec::new());
                continue;
            };
            let mut order = vec![first];
            let mut cur = next[v][first];
            while cur != first {
                if cur == usize::MAX || order.len() > graph.degree(v) {
                    return Err(EmbeddingError::InvalidRotation {
                        vertex: v,
                        message: "faces do not close up around the vertex".into(),
                    });
                }
                order.push(cur);
                cur = next[v][cur];
            }
            rotation.push(order);
        }
        CombinatorialMap::new(graph, rotation, &[])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Clockwise neighbor order at `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn is_negative(&self, a: usize, b: usize) -> bool {
        self.negative[a] >> b & 1 == 1
    }

    /// Edges with sign −1, sorted.
    pub fn negative_edges(&self) -> Vec<Edge> {
        self.graph.edges().into_iter().filter(|e| self.is_negative(e.u(), e.v())).collect()
    }

    /// Local switch at `v`: flips the sign of every incident edge and reverses
    /// the rotation at `v`. The result describes the same embedding.
    pub fn switch_vertex(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.rotation[v].reverse();
        let nbrs = self.graph.neighbor_mask(v);
        out.negative[v] ^= nbrs;
        for u in bits(nbrs) {
            out.negative[u] ^= 1 << v;
        }
        out
    }

    /// Copy with one edge's sign flipped.
    pub fn flip_sign(&self, e: Edge) -> Result<Self, EmbeddingError> {
        if !self.graph.contains_edge(e) {
            return Err(EmbeddingError::EdgeNotInGraph(e));
        }
        let mut out = self.clone();
        out.negative[e.u()] ^= 1 << e.v();
        out.negative[e.v()] ^= 1 << e.u();
        Ok(out)
    }
}

impl std::fmt::Debug for CombinatorialMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CombinatorialMap")
            .field("rotation", &self.rotation)
            .field("negative", &self.negative_edges())
            .finish()
    }
}

/// Rejects inputs outside the domain of face tracing.
pub(crate) fn check_traceable(g: &Graph) -> Result<(), EmbeddingError> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(EmbeddingError::NoEdges);
    }
    Ok(())
}
