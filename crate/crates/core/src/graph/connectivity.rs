use super::{Graph, GraphError};

/// Size of a minimum vertex cut, `n - 1` for complete graphs.
///
/// Exact: scans vertex subsets by increasing size and returns the first size
/// whose removal disconnects what remains.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::ConnectivityUndefined);
    }
    let all = g.vertex_mask();
    for k in 0..n - 1 {
        // Removing k vertices leaves n - k >= 2.
        if subsets_of_size(n, k).any(|cut| !g.is_connected_within(all & !cut)) {
            return Ok(k);
        }
    }
    Ok(n - 1)
}

/// All `k`-element subsets of `0..n` as bitmasks, in increasing numeric order
/// (Gosper's hack).
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(((1u128 << k) - 1) as u64)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur as u128 + c as u128;
            let succ = ((((r as u64) ^ cur) >> 2) / c) as u128 | r;
            (succ < limit).then_some(succ as u64)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    fn gen(f: Family) -> Graph {
        generate_family(&f).unwrap()
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert!(subsets_of_size(6, 3).all(|s| s.count_ones() == 3 && s < 64));
        assert_eq!(subsets_of_size(62, 1).count(), 62);
    }

    #[test]
    fn known_connectivities() {
        assert_eq!(vertex_connectivity(&gen(Family::Complete(4))), Ok(3));
        assert_eq!(vertex_connectivity(&gen(Family::Cycle(6))), Ok(2));
        // Also networkx.node_connectivity(petersen_graph()).
        assert_eq!(vertex_connectivity(&gen(Family::Petersen)), Ok(3));
        assert_eq!(vertex_connectivity(&gen(Family::Hypercube(3))), Ok(3));
        assert_eq!(vertex_connectivity(&gen(Family::Icosahedron)), Ok(5));
        assert_eq!(vertex_connectivity(&gen(Family::CompleteBipartite(2, 5))), Ok(2));
        assert_eq!(vertex_connectivity(&gen(Family::JoinCounterexample(2))), Ok(4));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&split), Ok(0));
        let k2 = gen(Family::Complete(2));
        assert_eq!(vertex_connectivity(&k2), Ok(1));
        assert_eq!(
            vertex_connectivity(&gen(Family::Complete(1))),
            Err(GraphError::ConnectivityUndefined)
        );
    }

    #[test]
    fn bounded_by_min_degree() {
        for f in [Family::Cycle(7), Family::Petersen, Family::Hypercube(4), Family::Icosahedron] {
            let g = gen(f);
            assert!(vertex_connectivity(&g).unwrap() <= g.min_degree());
        }
    }
}
