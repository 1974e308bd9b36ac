//! `.rot` text format for signed rotation systems.
//!
//! ```text
//! n m
//! 0: 1 2 3
//! 1: 0 3 2
//! ...
//! sign 0 1 -1
//! ```
//!
//! The first line gives the vertex and edge counts, then one line per vertex
//! lists its neighbors in clockwise order. Optional `sign u v -1` lines mark
//! negative edges; unlisted edges are positive.

use std::fmt::Write as _;

use super::{CombinatorialMap, EmbeddingError};
use crate::graph::{Edge, Graph, MAX_VERTICES};

fn perr(line: usize, message: impl Into<String>) -> EmbeddingError {
    EmbeddingError::RotParse { line, message: message.into() }
}

fn parse_num(tok: &str, line: usize) -> Result<usize, EmbeddingError> {
    tok.parse().map_err(|_| perr(line, format!("`{tok}` is not a non-negative integer")))
}

pub fn parse_rot(text: &str) -> Result<CombinatorialMap, EmbeddingError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing `n m` header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(perr(hline, "header must be `n m`"));
    }
    let n = parse_num(nums[0], hline)?;
    let m = parse_num(nums[1], hline)?;
    if n > MAX_VERTICES {
        return Err(perr(hline, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }

    let mut rotation = vec![None::<Vec<usize>>; n];
    let mut negative = Vec::new();
    for (lno, line) in lines {
        if let Some(rest) = line.strip_prefix("sign") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(perr(lno, "sign line must be `sign u v ±1`"));
            }
            let (a, b) = (parse_num(toks[0], lno)?, parse_num(toks[1], lno)?);
            let e = Edge::new(a, b).ok_or_else(|| perr(lno, "sign line names a loop"))?;
            match toks[2] {
                "-1" => negative.push(e),
                "1" | "+1" => {}
                other => return Err(perr(lno, format!("sign must be 1 or -1, got `{other}`"))),
            }
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| perr(lno, "expected `v: u1 u2 ...` or `sign u v -1`"))?;
        let v = parse_num(head.trim(), lno)?;
        if v >= n {
            return Err(perr(lno, format!("vertex {v} out of range for n = {n}")));
        }
        if rotation[v].is_some() {
            return Err(perr(lno, format!("rotation for vertex {v} given twice")));
        }
        let order =
            tail.split_whitespace().map(|t| parse_num(t, lno)).collect::<Result<Vec<_>, _>>()?;
        if let Some(&u) = order.iter().find(|&&u| u >= n) {
            return Err(perr(lno, format!("neighbor {u} out of range for n = {n}")));
        }
        rotation[v] = Some(order);
    }

    let rotation: Vec<Vec<usize>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| perr(0, format!("no rotation line for vertex {v}"))))
        .collect::<Result<_, _>>()?;

    // Every listed adjacency must be reciprocated.
    for (v, order) in rotation.iter().enumerate() {
        for &u in order {
            if u == v {
                return Err(EmbeddingError::InvalidRotation { vertex: v, message: "loop".into() });
            }
            if !rotation[u].contains(&v) {
                return Err(EmbeddingError::InvalidRotation {
                    vertex: v,
                    message: format!("{u} is listed but {u} does not list {v}"),
                });
            }
        }
    }
    let graph = Graph::from_edges(
        n,
        rotation.iter().enumerate().flat_map(|(v, o)| o.iter().map(move |&u| (v, u))),
    )
    .map_err(|e| perr(0, e.to_string()))?;
    if graph.edge_count() != m {
        return Err(perr(hline, format!("header says {m} edges, rotations describe {}", graph.edge_count())));
    }
    CombinatorialMap::new(graph, rotation, &negative)
}

pub fn write_rot(map: &CombinatorialMap) -> String {
    let mut out = String::new();
    let g = map.graph();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "{v}:").unwrap();
        for u in map.rotation(v) {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    for e in map.negative_edges() {
        writeln!(out, "sign {} {} -1", e.u(), e.v()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "4 6\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n";

    #[test]
    fn round_trip() {
        let map = parse_rot(K4).unwrap();
        assert_eq!(write_rot(&map), K4);
        let signed = map.flip_sign(Edge::new(1, 3).unwrap()).unwrap();
        let text = write_rot(&signed);
        assert!(text.ends_with("sign 1 3 -1\n"));
        assert_eq!(parse_rot(&text).unwrap(), signed);
    }

    #[test]
    fn accepts_comments_and_positive_signs() {
        let text = "# K4\n4 6\n0: 1 2 3\n1: 0 3 2\n\n2: 0 1 3\n3: 0 2 1\nsign 0 1 1\n";
        assert!(parse_rot(text).unwrap().negative_edges().is_empty());
    }

    #[test]
    fn rejects_inconsistent_rotations() {
        // 3 lists 1 but 1 does not list 3.
        let bad = "4 6\n0: 1 2 3\n1: 0 2\n2: 0 1 3\n3: 0 2 1\n";
        assert!(matches!(parse_rot(bad), Err(EmbeddingError::InvalidRotation { vertex: 3, .. })));
        let wrong_m = "4 5\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n";
        assert!(matches!(parse_rot(wrong_m), Err(EmbeddingError::RotParse { line: 1, .. })));
        let missing = "4 6\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n";
        assert!(matches!(parse_rot(missing), Err(EmbeddingError::RotParse { .. })));
        let dup = "4 6\n0: 1 2 3\n0: 1 2 3\n";
        assert!(matches!(parse_rot(dup), Err(EmbeddingError::RotParse { line: 3, .. })));
        let bad_sign = format!("{K4}sign 0 2 -2\n");
        assert!(matches!(parse_rot(&bad_sign), Err(EmbeddingError::RotParse { line: 6, .. })));
        let absent_edge = "3 2\n0: 1\n1: 0 2\n2: 1\nsign 0 2 -1\n";
        assert!(matches!(parse_rot(absent_edge), Err(EmbeddingError::EdgeNotInGraph(_))));
        assert!(matches!(parse_rot(""), Err(EmbeddingError::RotParse { line: 1, .. })));
    }
}
