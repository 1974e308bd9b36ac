use super::{check_traceable, CombinatorialMap, EmbeddingError};
use crate::graph::bits;

/// A facial walk, listed by the vertex at each corner in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.walk.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// For each vertex, the index of the face at each of its corners.
    pub corners: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Face::size).collect()
    }

    /// Sizes of the faces at each corner of `v`.
    pub fn corner_sizes(&self, v: usize) -> Vec<usize> {
        self.corners[v].iter().map(|&f| self.faces[f].size()).collect()
    }
}

/// Dart `tail -> head` traversed with a local orientation (`flipped` = −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct State {
    pub tail: usize,
    pub head: usize,
    pub flipped: bool,
}

impl State {
    pub(crate) fn index(self, n: usize) -> usize {
        (self.tail * n + self.head) * 2 + self.flipped as usize
    }
}

/// Follows a state across its edge and turns at the head: to the rotation
/// successor under positive orientation, to the predecessor otherwise.
pub(crate) fn step(map: &CombinatorialMap, pos: &[Vec<usize>], s: State) -> State {
    let w = s.head;
    let flipped = s.flipped ^ map.is_negative(s.tail, s.head);
    let rot = map.rotation(w);
    let d = rot.len();
    let q = pos[w][s.tail];
    let next = if flipped { rot[(q + d - 1) % d] } else { rot[(q + 1) % d] };
    State { tail: w, head: next, flipped }
}

/// The state that traverses the same corner sequence backwards.
pub(crate) fn reverse(map: &CombinatorialMap, s: State) -> State {
    State {
        tail: s.head,
        head: s.tail,
        flipped: !(s.flipped ^ map.is_negative(s.tail, s.head)),
    }
}

pub(crate) fn position_table(map: &CombinatorialMap) -> Vec<Vec<usize>> {
    let n = map.vertex_count();
    let mut pos = vec![vec![usize::MAX; n]; n];
    for (v, row) in pos.iter_mut().enumerate() {
        for (i, &u) in map.rotation(v).iter().enumerate() {
            row[u] = i;
        }
    }
    pos
}

/// Traces the faces of the embedding.
///
/// Each facial boundary is found twice among the orbits of [`step`], once in
/// each direction; the first orbit met in (vertex, rotation position,
/// orientation) order is kept and its reverse is discarded.
pub fn trace_faces(map: &CombinatorialMap) -> Result<FaceSet, EmbeddingError> {
    check_traceable(map.graph())?;
    let n = map.vertex_count();
    let pos = position_table(map);
    let mut seen = vec![false; n * n * 2];
    let mut faces = Vec::new();
    let mut corners = vec![Vec::new(); n];

    for v in 0..n {
        for &u in map.rotation(v) {
            for flipped in [false, true] {
                let start = State { tail: v, head: u, flipped };
                if seen[start.index(n)] {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let mut cur = start;
                loop {
                    seen[cur.index(n)] = true;
                    seen[reverse(map, cur).index(n)] = true;
                    walk.push(cur.tail);
                    corners[cur.tail].push(id);
                    cur = step(map, &pos, cur);
                    if cur == start {
                        break;
                    }
                }
                faces.push(Face { walk });
            }
        }
    }
    debug_assert_eq!(
        faces.iter().map(Face::size).sum::<usize>(),
        2 * map.graph().edge_count()
    );
    Ok(FaceSet { faces, corners })
}

/// True iff every cycle has positive sign product, i.e. the signs switch to
/// all-positive. Decided by two-coloring a spanning tree.
pub fn is_orientable_map(map: &CombinatorialMap) -> Result<bool, EmbeddingError> {
    let g = map.graph();
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let n = g.vertex_count();
    // side[v] = product of signs on the tree path from vertex 0.
    let mut side = vec![None::<bool>; n];
    side[0] = Some(false);
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let sv = side[v].unwrap();
        for u in bits(g.neighbor_mask(v)) {
            let expected = sv ^ map.is_negative(v, u);
            match side[u] {
                None => {
                    side[u] = Some(expected);
                    queue.push(u);
                }
                Some(su) if su != expected => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}
