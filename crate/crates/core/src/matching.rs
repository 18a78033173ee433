//! Maximum matching in general graphs.
//!
//! [`maximum_matching`] is Edmonds' augmenting-path search with blossom
//! contraction, seeded by a greedy matching over the sorted edge list.
//! Roots and neighbours are scanned in ascending order, so the returned
//! matching itself is reproducible, not just its size.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`mu_bruteforce`].
pub const MU_BRUTEFORCE_LIMIT: usize = 14;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.pairs {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn seed_greedily(&mut self) {
        for (u, v) in self.g.edges() {
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, root: usize, mut child: usize) {
        while self.base[v] != root {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
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
                    self.queue.push_back(next);
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

    fn run(mut self) -> Matching {
        self.seed_greedily();
        for root in 0..self.g.n() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        let pairs = (0..self.g.n())
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect();
        Matching { pairs }
    }
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

/// The matching number mu(g).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * matching_number(g) == g.n()
}

/// Exact mu(g) by exhaustive search: the lowest free vertex is either left
/// unmatched or matched to each of its free neighbours in turn.
pub fn mu_bruteforce(g: &Graph) -> Result<usize> {
    if g.n() > MU_BRUTEFORCE_LIMIT {
        return Err(Error::Unsupported(format!(
            "brute-force matching for n = {} (limit {MU_BRUTEFORCE_LIMIT})",
            g.n()
        )));
    }
    fn go(g: &Graph, free: u64, size: usize, best: &mut usize) {
        if size + free.count_ones() as usize / 2 <= *best {
            return;
        }
        if free == 0 {
            *best = size;
            return;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1u64 << v);
        let mut options = g.row(v) & rest;
        while options != 0 {
            let w = options.trailing_zeros() as usize;
            options &= options - 1;
            go(g, rest & !(1u64 << w), size + 1, best);
        }
        go(g, rest, size, best);
    }
    let mut best = 0;
    go(g, g.vertices().bits(), 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn odd_cycle_matches_two() {
        let m = maximum_matching(&cycle(5));
        assert_eq!(m.len(), 2);
        assert!(m.is_valid_for(&cycle(5)));
    }

    #[test]
    fn small_brute_force_values() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(mu_bruteforce(&p4).unwrap(), 2);
        assert_eq!(mu_bruteforce(&k4).unwrap(), 2);
        assert!(mu_bruteforce(&Graph::empty(15).unwrap()).is_err());
    }

    #[test]
    fn perfect_matching_predicate() {
        assert!(has_perfect_matching(&Graph::from_edges(2, &[(0, 1)]).unwrap()));
        assert!(!has_perfect_matching(&Graph::empty(1).unwrap()));
        assert!(has_perfect_matching(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn greedy_seed_is_augmented() {
        // Greedy picks (0,1) and (2,3) and gets stuck; the optimum is
        // (0,1), (2,5), (3,4).
        let g = Graph::from_edges(6, &[(1, 2), (0, 1), (2, 3), (1, 3), (3, 4), (2, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert!(m.is_valid_for(&g));
        assert_eq!(m.len(), mu_bruteforce(&g).unwrap());
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn matching_is_reproducible() {
        let g = cycle(7);
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }
}
