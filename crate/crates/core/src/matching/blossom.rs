//! Edmonds' blossom algorithm on bitmask adjacency rows.
//!
//! The solver only ever looks at vertices inside an `alive` mask, so callers
//! can delete vertices and edges by masking instead of rebuilding graphs.

use crate::graph::bits;

const NONE: usize = usize::MAX;

pub(crate) struct Blossom<'a> {
    rows: &'a [u64],
    alive: u64,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    pub(crate) fn new(rows: &'a [u64], alive: u64) -> Self {
        let n = rows.len();
        Blossom {
            rows,
            alive,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn greedy(&mut self) {
        for v in bits(self.alive) {
            if self.mate[v] != NONE {
                continue;
            }
            let free = self.rows[v] & self.alive;
            if let Some(u) = bits(free).find(|&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root`;
    /// returns its other end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.rows.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in bits(self.rows[v] & self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.alive >> i & 1 == 1 && self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    /// Runs to a maximum matching. With `stop_on_exposed`, returns `false` as
    /// soon as some vertex is provably exposed in every maximum matching.
    fn run(&mut self, stop_on_exposed: bool) -> bool {
        self.greedy();
        for v in bits(self.alive) {
            if self.mate[v] != NONE {
                continue;
            }
            match self.find_path(v) {
                Some(end) => self.augment(end),
                None if stop_on_exposed => return false,
                None => {}
            }
        }
        true
    }

    pub(crate) fn into_mates(mut self) -> Vec<usize> {
        self.run(false);
        self.mate
    }
}

/// Mate array of a maximum matching on the subgraph induced by `alive`;
/// `usize::MAX` marks exposed vertices.
pub(crate) fn maximum_matching_mates(rows: &[u64], alive: u64) -> Vec<usize> {
    Blossom::new(rows, alive).into_mates()
}

/// Whether the subgraph induced by `alive` has a perfect matching.
pub(crate) fn has_perfect_matching(rows: &[u64], alive: u64) -> bool {
    if alive.count_ones() % 2 == 1 {
        return false;
    }
    if alive == 0 {
        return true;
    }
    // Isolated vertex shortcut.
    if bits(alive).any(|v| rows[v] & alive == 0) {
        return false;
    }
    Blossom::new(rows, alive).run(true)
}

pub(crate) fn is_none(x: usize) -> bool {
    x == NONE
}
