//! Brute-force references written without the library's matching code.

#![allow(dead_code)]

use emn::Graph;

/// Edges in lexicographic order, read straight off the adjacency.
pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if g.has_edge(v, u) && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every perfect matching as a bitmask over `edge_list` indices.
pub fn perfect_matching_masks(g: &Graph) -> Vec<u64> {
    fn go(edges: &[(usize, usize)], n: usize, used: u64, chosen: u64, out: &mut Vec<u64>) {
        let Some(v) = (0..n).find(|&v| used >> v & 1 == 0) else {
            out.push(chosen);
            return;
        };
        for (i, &(a, b)) in edges.iter().enumerate() {
            let w = if a == v { b } else if b == v { a } else { continue };
            if used >> w & 1 == 0 {
                go(edges, n, used | 1 << v | 1 << w, chosen | 1 << i, out);
            }
        }
    }
    let edges = edge_list(g);
    let mut out = Vec::new();
    if g.vertex_count().is_multiple_of(2) {
        go(&edges, g.vertex_count(), 0, 0, &mut out);
    }
    out
}

/// Size of a largest matching, by trying every edge subset.
pub fn brute_matching_number(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], from: usize, used: u64) -> usize {
        let mut best = 0;
        for i in from..edges.len() {
            let (a, b) = edges[i];
            if used >> a & 1 == 0 && used >> b & 1 == 0 {
                best = best.max(1 + go(edges, i + 1, used | 1 << a | 1 << b));
            }
        }
        best
    }
    go(&edge_list(g), 0, 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Oracle {
    NotApplicable,
    Holds,
    /// First failing (M, N), edges as pairs.
    Fails(Vec<(usize, usize)>, Vec<(usize, usize)>),
}

/// Matchings of size `k` among `edges[from..]` avoiding `used` vertices,
/// as index lists in lexicographic order.
fn matchings(edges: &[(usize, usize)], k: usize, used: u64) -> Vec<Vec<usize>> {
    fn go(edges: &[(usize, usize)], k: usize, from: usize, used: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..edges.len() {
            let (a, b) = edges[i];
            if used >> a & 1 == 0 && used >> b & 1 == 0 {
                cur.push(i);
                go(edges, k, i + 1, used | 1 << a | 1 << b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(edges, k, 0, used, &mut Vec::new(), &mut out);
    out
}

/// E(m,n) by checking every vertex-disjoint (M, N) against the full list
/// of perfect matchings.
pub fn oracle_emn(g: &Graph, m: usize, n: usize) -> Oracle {
    let nv = g.vertex_count();
    if !connected(g) || nv % 2 == 1 || nv < 2 * m + 2 * n + 2 {
        return Oracle::NotApplicable;
    }
    let edges = edge_list(g);
    let pms = perfect_matching_masks(g);
    if pms.is_empty() && matchings(&edges, m + n, 0).is_empty() {
        return Oracle::NotApplicable;
    }
    let cover = |idx: &[usize]| idx.iter().fold(0u64, |acc, &i| acc | 1 << edges[i].0 | 1 << edges[i].1);
    let mask = |idx: &[usize]| idx.iter().fold(0u64, |acc, &i| acc | 1 << i);
    for big_m in matchings(&edges, m, 0) {
        let mm = mask(&big_m);
        for big_n in matchings(&edges, n, cover(&big_m)) {
            let nm = mask(&big_n);
            if !pms.iter().any(|&pm| pm & mm == mm && pm & nm == 0) {
                let pairs = |idx: &[usize]| idx.iter().map(|&i| edges[i]).collect();
                return Oracle::Fails(pairs(&big_m), pairs(&big_n));
            }
        }
    }
    Oracle::Holds
}

/// Compares a library verdict with the oracle, witness included.
pub fn agrees(v: &emn::EmnVerdict, o: &Oracle) -> bool {
    use emn::EmnVerdict;
    let pairs = |m: &emn::Matching| m.edges().iter().map(|e| (e.u(), e.v())).collect::<Vec<_>>();
    match (v, o) {
        (EmnVerdict::NotApplicable { .. }, Oracle::NotApplicable) => true,
        (EmnVerdict::Holds, Oracle::Holds) => true,
        (EmnVerdict::Fails { witness }, Oracle::Fails(m, n)) => pairs(&witness.m) == *m && pairs(&witness.n) == *n,
        _ => false,
    }
}
