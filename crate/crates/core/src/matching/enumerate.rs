//! Brute-force perfect matching enumeration. Used to audit witnesses
//! independently of the blossom solver.

use super::{Matching, MatchingError};
use crate::graph::{bits, Edge, Graph};

/// Every perfect matching of `g`, in lexicographic order.
pub fn perfect_matchings(g: &Graph) -> Vec<Matching> {
    fn go(g: &Graph, free: u64, acc: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        if free == 0 {
            out.push(Matching::from_sorted_unchecked({
                let mut edges = acc.clone();
                edges.sort_unstable();
                edges
            }));
            return;
        }
        let v = free.trailing_zeros() as usize;
        for u in bits(g.neighbor_mask(v) & free) {
            acc.push(Edge::new(v, u).unwrap());
            go(g, free & !(1 << v) & !(1 << u), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if g.vertex_count().is_multiple_of(2) {
        go(g, g.vertex_mask(), &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// True iff `m` and `n` are vertex-disjoint and no perfect matching of `g`
/// contains `m` while avoiding `n`.
pub fn verify_witness(g: &Graph, m: &Matching, n: &Matching) -> Result<bool, MatchingError> {
    m.check_in(g)?;
    n.check_in(g)?;
    if m.covered() & n.covered() != 0 {
        return Ok(false);
    }
    let extends = perfect_matchings(g).iter().any(|f| {
        m.edges().iter().all(|&e| f.contains(e)) && n.edges().iter().all(|&e| !f.contains(e))
    });
    Ok(!extends)
}
