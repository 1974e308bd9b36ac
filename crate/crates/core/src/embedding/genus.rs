//! Exhaustive minimum-genus search over signed rotation systems.
//!
//! Genus levels are tried in increasing order starting from the Euler bound.
//! At each level a branch-and-bound search assigns rotations vertex by vertex
//! (and, for non-orientable surfaces, signs of the non-tree edges as soon as
//! both ends are placed). A partial assignment is abandoned when the faces
//! already closed plus an upper bound on the faces still possible cannot reach
//! the face count the level requires.

use std::time::{Duration, Instant};

use super::{check_traceable, CombinatorialMap, EmbeddingError};
use crate::graph::{bits, Edge, Graph};
use crate::surfaces::{Surface, SurfaceKind};

/// Limits for the exhaustive search. `max_rotations` caps the number of
/// partial rotation (and sign) assignments the search may visit; `timeout`
/// is measured from the start of each search call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_rotations: u64,
    pub timeout: Option<Duration>,
}

impl SearchBudget {
    pub const DEFAULT_MAX_ROTATIONS: u64 = 20_000_000;

    pub fn new(max_rotations: u64) -> Self {
        SearchBudget { max_rotations, timeout: None }
    }

    pub fn unlimited() -> Self {
        SearchBudget::new(u64::MAX)
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_MAX_ROTATIONS)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusResult {
    pub genus: u32,
    pub surface: Surface,
    pub witness: CombinatorialMap,
    /// Partial assignments visited across all levels.
    pub explored: u64,
}

/// Number of signed rotation systems the search ranges over:
/// Π (deg(v) − 1)!, times 2^β − 1 sign classes when non-orientable
/// (β = |E| − |V| + 1). The flag is set when the count saturated `u128`.
pub fn search_space_size(g: &Graph, kind: SurfaceKind) -> (u128, bool) {
    let mut total: u128 = 1;
    let mut saturated = false;
    let mut mul = |x: u128| match total.checked_mul(x) {
        Some(t) => total = t,
        None => {
            total = u128::MAX;
            saturated = true;
        }
    };
    for v in 0..g.vertex_count() {
        for k in 2..g.degree(v) {
            mul(k as u128);
        }
    }
    if kind == SurfaceKind::NonOrientable {
        let beta = cycle_rank(g);
        if beta >= 128 {
            mul(u128::MAX);
        } else {
            mul((1u128 << beta) - 1);
        }
    }
    (total, saturated)
}

fn cycle_rank(g: &Graph) -> usize {
    (g.edge_count() + 1).saturating_sub(g.vertex_count())
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![None::<bool>; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap();
            for u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(cu) if cu == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Shortest possible face: 2 for a single edge, 4 in bipartite graphs
/// (closed walks are even), 3 otherwise.
fn min_face_len(g: &Graph) -> usize {
    if g.edge_count() == 1 {
        2
    } else if is_bipartite(g) {
        4
    } else {
        3
    }
}

/// Faces needed for a 2-cell embedding on `surface`.
fn faces_for(g: &Graph, surface: Surface) -> i64 {
    surface.chi() - g.vertex_count() as i64 + g.edge_count() as i64
}

/// Smallest genus of the given kind allowed by F ≤ 2|E|/ℓ, where ℓ is the
/// shortest possible face length.
pub fn euler_genus_lower_bound(g: &Graph, kind: SurfaceKind) -> u32 {
    let max_faces = (2 * g.edge_count() / min_face_len(g)) as i64;
    // χ = V − E + F ≤ V − E + max_faces.
    let max_chi = g.vertex_count() as i64 - g.edge_count() as i64 + max_faces;
    match kind {
        SurfaceKind::Orientable => ((2 - max_chi).max(0) as u32).div_ceil(2),
        SurfaceKind::NonOrientable => (2 - max_chi).max(1) as u32,
    }
}

/// Minimum genus of the given kind over all 2-cell embeddings, with a map
/// attaining it.
pub fn exhaustive_genus(
    g: &Graph,
    kind: SurfaceKind,
    budget: SearchBudget,
) -> Result<GenusResult, EmbeddingError> {
    check_traceable(g)?;
    let beta = cycle_rank(g) as u32;
    if kind == SurfaceKind::NonOrientable && beta == 0 {
        return Err(EmbeddingError::NoNonOrientableEmbedding);
    }
    let deadline = budget.timeout.map(|t| Instant::now() + t);
    let mut explored = 0;
    let top = match kind {
        SurfaceKind::Orientable => beta / 2,
        SurfaceKind::NonOrientable => beta,
    };
    for genus in euler_genus_lower_bound(g, kind)..=top {
        let surface = Surface::new(kind, genus).expect("levels start at a valid genus");
        if let Some(witness) = search_level(g, surface, budget, deadline, &mut explored)? {
            return Ok(GenusResult { genus, surface, witness, explored });
        }
    }
    unreachable!("every connected graph embeds with a single face")
}

/// A 2-cell embedding of `g` on a surface of the same kind as `surface` and
/// genus at most its genus, if one exists.
pub fn embeds_on_surface(
    g: &Graph,
    surface: Surface,
    budget: SearchBudget,
) -> Result<Option<CombinatorialMap>, EmbeddingError> {
    check_traceable(g)?;
    if surface.kind() == SurfaceKind::NonOrientable && cycle_rank(g) == 0 {
        return Err(EmbeddingError::NoNonOrientableEmbedding);
    }
    let deadline = budget.timeout.map(|t| Instant::now() + t);
    let mut explored = 0;
    search_level(g, surface, budget, deadline, &mut explored)
}

fn search_level(
    g: &Graph,
    surface: Surface,
    budget: SearchBudget,
    deadline: Option<Instant>,
    explored: &mut u64,
) -> Result<Option<CombinatorialMap>, EmbeddingError> {
    let target = faces_for(g, surface);
    let max_faces = (2 * g.edge_count() / min_face_len(g)) as i64;
    if target > max_faces {
        return Ok(None);
    }
    let mut s = Searcher::new(g, surface.kind(), target.max(1) as usize, budget, deadline, explored);
    let found = s.dfs(0)?;
    Ok(found.then(|| s.witness()))
}

const NONE: usize = usize::MAX;

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    kind: SurfaceKind,
    target: usize,
    budget: SearchBudget,
    deadline: Option<Instant>,
    explored: &'a mut u64,
    order: Vec<usize>,
    /// Non-tree edges whose later endpoint (in `order`) is the key vertex.
    cotree_closing: Vec<Vec<usize>>,
    darts: Vec<(usize, usize)>,
    min_face: usize,
    rotation: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    negative: Vec<u64>,
    /// Vertices whose rotation is fixed.
    fixed: u64,
    /// Edges whose sign is decided, as adjacency rows.
    signed: Vec<u64>,
    seen: Vec<u32>,
    has_pred: Vec<u32>,
    stamp: u32,
}

impl<'a> Searcher<'a> {
    fn new(
        g: &'a Graph,
        kind: SurfaceKind,
        target: usize,
        budget: SearchBudget,
        deadline: Option<Instant>,
        explored: &'a mut u64,
    ) -> Self {
        let n = g.vertex_count();
        // BFS order and tree from vertex 0.
        let mut order = vec![0];
        let mut parent = vec![NONE; n];
        let mut placed = 1u64;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in bits(g.neighbor_mask(v) & !placed) {
                placed |= 1 << u;
                parent[u] = v;
                order.push(u);
            }
        }
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut cotree_closing = vec![Vec::new(); n];
        let mut signed = vec![0u64; n];
        for e in g.edges() {
            let (a, b) = (e.u(), e.v());
            let tree = parent[a] == b || parent[b] == a;
            if tree || kind == SurfaceKind::Orientable {
                signed[a] |= 1 << b;
                signed[b] |= 1 << a;
            } else {
                let later = if rank[a] > rank[b] { a } else { b };
                cotree_closing[later].push(later ^ a ^ b);
            }
        }
        let darts = (0..n).flat_map(|v| g.neighbors(v).map(move |u| (v, u))).collect();
        Searcher {
            g,
            n,
            kind,
            target,
            budget,
            deadline,
            explored,
            order,
            cotree_closing,
            darts,
            min_face: min_face_len(g),
            rotation: vec![Vec::new(); n],
            succ: vec![NONE; n * n],
            pred: vec![NONE; n * n],
            negative: vec![0; n],
            fixed: 0,
            signed,
            seen: vec![0; n * n * 2],
            has_pred: vec![0; n * n * 2],
            stamp: 0,
        }
    }

    fn tick(&mut self) -> Result<(), EmbeddingError> {
        *self.explored += 1;
        if *self.explored > self.budget.max_rotations {
            let (space, saturated) = search_space_size(self.g, self.kind);
            return Err(EmbeddingError::SearchTooLarge { space, saturated, explored: *self.explored });
        }
        if self.explored.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(EmbeddingError::Timeout { explored: *self.explored });
                }
            }
        }
        Ok(())
    }

    fn set_rotation(&mut self, v: usize, order: &[usize]) {
        let d = order.len();
        for i in 0..d {
            let a = order[i];
            let b = order[(i + 1) % d];
            self.succ[v * self.n + a] = b;
            self.pred[v * self.n + b] = a;
        }
        self.rotation[v].clear();
        self.rotation[v].extend_from_slice(order);
    }

    fn state_index(&self, tail: usize, head: usize, flipped: bool) -> usize {
        (tail * self.n + head) * 2 + flipped as usize
    }

    /// The state after `(t, h, f)`, if the rotation at `h` and the sign of
    /// `th` are both decided.
    fn next_state(&self, t: usize, h: usize, f: bool) -> Option<(usize, usize, bool)> {
        if self.fixed >> h & 1 == 0 || self.signed[t] >> h & 1 == 0 {
            return None;
        }
        let flipped = f ^ (self.negative[t] >> h & 1 == 1);
        let next = if flipped { self.pred[h * self.n + t] } else { self.succ[h * self.n + t] };
        Some((h, next, flipped))
    }

    /// Upper bound on the face count of any completion of the current
    /// partial assignment. Exact once everything is assigned.
    ///
    /// Decided transitions split the states into closed orbits and maximal
    /// open chains. Every future orbit is a union of whole chains with at
    /// least `min_face` states, so a chain that is already that long
    /// accounts for at most one orbit by itself.
    fn face_bound(&mut self) -> usize {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|x| *x = 0);
            self.has_pred.iter_mut().for_each(|x| *x = 0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        for i in 0..self.darts.len() {
            let (t, h) = self.darts[i];
            for f in [false, true] {
                if let Some((a, b, c)) = self.next_state(t, h, f) {
                    let idx = self.state_index(a, b, c);
                    self.has_pred[idx] = stamp;
                }
            }
        }

        let mut long_chains = 0;
        let mut short_states = 0;
        for i in 0..self.darts.len() {
            let (t0, h0) = self.darts[i];
            for f0 in [false, true] {
                let start = self.state_index(t0, h0, f0);
                if self.has_pred[start] == stamp {
                    continue;
                }
                let (mut t, mut h, mut f) = (t0, h0, f0);
                let mut len = 0;
                loop {
                    let idx = self.state_index(t, h, f);
                    self.seen[idx] = stamp;
                    len += 1;
                    match self.next_state(t, h, f) {
                        Some(s) => (t, h, f) = s,
                        None => break,
                    }
                }
                if len >= self.min_face {
                    long_chains += 1;
                } else {
                    short_states += len;
                }
            }
        }

        let mut closed_orbits = 0;
        for i in 0..self.darts.len() {
            let (t0, h0) = self.darts[i];
            for f0 in [false, true] {
                if self.seen[self.state_index(t0, h0, f0)] == stamp {
                    continue;
                }
                closed_orbits += 1;
                let (mut t, mut h, mut f) = (t0, h0, f0);
                loop {
                    let idx = self.state_index(t, h, f);
                    if self.seen[idx] == stamp {
                        break;
                    }
                    self.seen[idx] = stamp;
                    (t, h, f) = self.next_state(t, h, f).expect("states off every chain lie on cycles");
                }
            }
        }
        (closed_orbits + long_chains + short_states / self.min_face) / 2
    }

    fn dfs(&mut self, depth: usize) -> Result<bool, EmbeddingError> {
        if depth == self.order.len() {
            if self.kind == SurfaceKind::NonOrientable && self.negative.iter().all(|&r| r == 0) {
                return Ok(false);
            }
            return Ok(self.face_bound() >= self.target);
        }
        let v = self.order[depth];
        let nbrs: Vec<usize> = self.g.neighbors(v).collect();
        let mut perm = nbrs.clone();
        // Reversing every rotation mirrors the embedding, so at the root one
        // orientation of each cyclic order suffices.
        let mirror_cut = depth == 0 && nbrs.len() >= 3;
        self.fixed |= 1 << v;
        loop {
            if !mirror_cut || perm[1] < perm[perm.len() - 1] {
                self.set_rotation(v, &perm);
                if self.assign_signs(depth, v, 0)? {
                    return Ok(true);
                }
            }
            if perm.len() < 3 || !next_permutation(&mut perm[1..]) {
                break;
            }
        }
        self.fixed &= !(1 << v);
        Ok(false)
    }

    /// Branches over the signs of the non-tree edges closed by `v`, then
    /// descends.
    fn assign_signs(&mut self, depth: usize, v: usize, k: usize) -> Result<bool, EmbeddingError> {
        let closing = &self.cotree_closing[v];
        if k == closing.len() {
            self.tick()?;
            if self.face_bound() < self.target {
                return Ok(false);
            }
            return self.dfs(depth + 1);
        }
        let u = closing[k];
        self.signed[v] |= 1 << u;
        self.signed[u] |= 1 << v;
        for negative in [false, true] {
            if negative {
                self.negative[v] |= 1 << u;
                self.negative[u] |= 1 << v;
            }
            let found = self.assign_signs(depth, v, k + 1)?;
            if negative {
                self.negative[v] &= !(1 << u);
                self.negative[u] &= !(1 << v);
            }
            if found {
                // Restore the sign for the witness.
                if negative {
                    self.negative[v] |= 1 << u;
                    self.negative[u] |= 1 << v;
                }
                return Ok(true);
            }
        }
        self.signed[v] &= !(1 << u);
        self.signed[u] &= !(1 << v);
        Ok(false)
    }

    fn witness(&self) -> CombinatorialMap {
        let negative: Vec<Edge> = self
            .g
            .edges()
            .into_iter()
            .filter(|e| self.negative[e.u()] >> e.v() & 1 == 1)
            .collect();
        CombinatorialMap::new(self.g.clone(), self.rotation.clone(), &negative)
            .expect("search assigns a rotation to every vertex")
    }
}

/// Lexicographic successor in place; false when `xs` is the last
/// permutation.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
