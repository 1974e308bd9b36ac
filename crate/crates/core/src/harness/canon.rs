//! Canonical forms and isomorph-free enumeration of small graphs.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::HarnessError;
use crate::graph::{bits, write_graph6, Graph};

pub const MAX_CANONICAL_VERTICES: usize = 10;
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Upper-triangle adjacency bits in column-major order, first pair in the
/// most significant position, minimized over relabelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let total = pair_count(self.n);
        let mut rows = vec![0u64; self.n];
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (total - 1 - pair_index(i, j)) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(&self.to_graph()))
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Colors vertices by iterated degree refinement. Colors are ranks of
/// sorted signatures, so they do not depend on the labeling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = g.degrees();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Canon<'a> {
    rows: &'a [u64],
    n: usize,
    total: usize,
    color: Vec<usize>,
    slots: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl Canon<'_> {
    fn search(&mut self, p: usize, cur: u64, smaller: bool) {
        if p == self.n {
            if self.best.is_none_or(|b| cur < b) {
                self.best = Some(cur);
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.color[v] != self.slots[p] {
                continue;
            }
            let mut next = cur;
            for i in 0..p {
                if self.rows[self.perm[i]] >> v & 1 == 1 {
                    next |= 1 << (self.total - 1 - pair_index(i, p));
                }
            }
            let mut now_smaller = smaller;
            if let (false, Some(best)) = (smaller, self.best) {
                let shift = self.total - pair_count(p + 1);
                let (a, b) = (next >> shift, best >> shift);
                if a > b {
                    continue;
                }
                now_smaller = a < b;
            }
            self.perm[p] = v;
            self.used |= 1 << v;
            self.search(p + 1, next, now_smaller);
            self.used &= !(1 << v);
        }
    }
}

/// Minimum encoding over the relabelings that list vertices by refined
/// degree class. Equal forms ⇔ isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, HarnessError> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(HarnessError::CanonicalTooLarge(n));
    }
    let color = refine(g);
    let mut slots = color.clone();
    slots.sort_unstable();
    let mut canon = Canon {
        rows: g.rows(),
        n,
        total: pair_count(n),
        color,
        slots,
        perm: vec![0; n],
        used: 0,
        best: None,
    };
    canon.search(0, 0, false);
    Ok(CanonicalForm { n, bits: canon.best.unwrap_or(0) })
}

/// Every graph on `n` vertices up to isomorphism, connected or not, sorted
/// by canonical form.
fn all_forms(n: usize) -> Vec<CanonicalForm> {
    if n == 0 {
        return vec![CanonicalForm { n: 0, bits: 0 }];
    }
    let mut level = vec![CanonicalForm { n: 1, bits: 0 }];
    for k in 2..=n {
        let mut next: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|form| {
                let base = form.to_graph();
                (0..1u64 << (k - 1)).map(move |nbrs| {
                    let mut rows = base.rows().to_vec();
                    for u in bits(nbrs) {
                        rows[u] |= 1 << (k - 1);
                    }
                    rows.push(nbrs);
                    canonical_form(&Graph::from_rows(rows)).expect("k is within the canonical limit")
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with minimum degree at least `min_degree`, in canonical order.
pub fn enumerate_connected_graphs(
    n: usize,
    min_degree: Option<usize>,
) -> Result<Vec<Graph>, HarnessError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(HarnessError::EnumerationTooLarge(n));
    }
    let floor = min_degree.unwrap_or(0);
    Ok(all_forms(n)
        .into_iter()
        .map(|f| f.to_graph())
        .filter(|g| g.is_connected() && g.min_degree() >= floor)
        .collect())
}
