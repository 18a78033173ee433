//! Independence number, maximum independent sets and SUMI tests.
//!
//! Both [`independence_number`] and [`enumerate_maximum_independent_sets`]
//! run the same branch-and-bound: branch on a maximum-degree vertex of the
//! remaining candidates (ties to the smallest index), include it or drop
//! it, and cut whenever a clique-cover bound says the branch cannot reach
//! the target size.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};

/// Default cap on the number of retained maximum independent sets.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 1_000_000;

/// Omega(G) together with alpha(G).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximumIndependentFamily {
    pub alpha: usize,
    pub sets: Vec<VertexSet>,
}

impl MaximumIndependentFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.row(v) & s.bits() == 0)
}

/// `s` is independent and touches every edge.
pub fn is_independent_vertex_cover(g: &Graph, s: VertexSet) -> bool {
    is_independent(g, s) && g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
}

/// Greedy clique cover of the candidate set; its size bounds alpha of the
/// induced subgraph from above.
fn clique_cover_bound(g: &Graph, mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !bit(v);
        let mut common = g.row(v) & cand;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !bit(w);
            common &= g.row(w) & !bit(w);
        }
        cliques += 1;
    }
    cliques
}

fn greedy_lower_bound(g: &Graph) -> usize {
    let mut cand = g.vertices().bits();
    let mut size = 0;
    while cand != 0 {
        let v = VertexSet::from_bits(cand)
            .iter()
            .min_by_key(|&v| (g.row(v) & cand).count_ones())
            .unwrap();
        cand &= !(g.row(v) | bit(v));
        size += 1;
    }
    size
}

struct Search<'g> {
    g: &'g Graph,
    best: usize,
    retain: bool,
    sets: Vec<VertexSet>,
    budget: usize,
    over_budget: bool,
}

impl Search<'_> {
    fn leaf(&mut self, chosen: u64) {
        let size = chosen.count_ones() as usize;
        if size > self.best {
            self.best = size;
            self.sets.clear();
        }
        if self.retain && size == self.best {
            if self.sets.len() == self.budget {
                self.over_budget = true;
                return;
            }
            self.sets.push(VertexSet::from_bits(chosen));
        }
    }

    fn go(&mut self, cand: u64, chosen: u64) {
        if self.over_budget {
            return;
        }
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            self.leaf(chosen);
            return;
        }
        let bound = size + clique_cover_bound(self.g, cand);
        if bound < self.best || (!self.retain && bound == self.best) {
            return;
        }
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0;
        for v in VertexSet::from_bits(cand).iter() {
            let d = (self.g.row(v) & cand).count_ones();
            if pivot == usize::MAX || d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        if pivot_deg == 0 {
            self.leaf(chosen | cand);
            return;
        }
        self.go(cand & !(self.g.row(pivot) | bit(pivot)), chosen | bit(pivot));
        self.go(cand & !bit(pivot), chosen);
    }
}

/// Exact alpha(g).
pub fn independence_number(g: &Graph) -> usize {
    let mut s = Search {
        g,
        best: greedy_lower_bound(g),
        retain: false,
        sets: Vec::new(),
        budget: 0,
        over_budget: false,
    };
    s.go(g.vertices().bits(), 0);
    s.best
}

pub fn enumerate_maximum_independent_sets(g: &Graph) -> Result<MaximumIndependentFamily> {
    enumerate_maximum_independent_sets_with_budget(g, DEFAULT_ENUMERATION_BUDGET)
}

/// All maximum independent sets, failing once more than `budget` would be
/// retained.
pub fn enumerate_maximum_independent_sets_with_budget(
    g: &Graph,
    budget: usize,
) -> Result<MaximumIndependentFamily> {
    let alpha = independence_number(g);
    let mut s = Search { g, best: alpha, retain: true, sets: Vec::new(), budget, over_budget: false };
    s.go(g.vertices().bits(), 0);
    if s.over_budget {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    debug_assert_eq!(s.best, alpha);
    Ok(MaximumIndependentFamily { alpha, sets: s.sets })
}

/// Strong unique maximum independence: exactly one maximum independent set
/// and its complement is independent too.
pub fn is_sumi_graph(g: &Graph) -> Result<bool> {
    // Two sets are enough to rule uniqueness out.
    let family = match enumerate_maximum_independent_sets_with_budget(g, 1) {
        Ok(f) => f,
        Err(Error::BudgetExceeded { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    let s = family.sets[0];
    Ok(is_independent(g, g.vertices().difference(s)))
}

/// For trees: all leaves lie pairwise at even distance. In a tree the
/// parity of `d(u, w)` is the parity of `d(u, r) + d(w, r)`, so this is the
/// same as all leaves sharing a colour class.
pub fn sumi_tree_leaf_check(g: &Graph) -> Result<bool> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let sides = g.bipartition().expect("trees are bipartite");
    let leaves: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    Ok(leaves.difference(sides.left).is_empty() || leaves.difference(sides.right).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{alpha_bruteforce, maximum_independent_sets_bruteforce};

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn independence_of_small_graphs() {
        assert_eq!(independence_number(&cycle(7)), 3);
        assert_eq!(independence_number(&complete(6)), 1);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(independence_number(&Graph::empty(5).unwrap()), 5);
    }

    #[test]
    fn is_independent_edge_cases() {
        let k2 = complete(2);
        assert!(is_independent(&k2, VertexSet::empty()));
        assert!(!is_independent(&k2, k2.vertices()));
    }

    #[test]
    fn complete_graph_family_is_singletons() {
        let f = enumerate_maximum_independent_sets(&complete(5)).unwrap();
        assert_eq!(f.alpha, 1);
        let mut got: Vec<_> = f.sets.iter().map(|s| s.to_vec()).collect();
        got.sort();
        assert_eq!(got, (0..5).map(|v| vec![v]).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_matches_oracle_on_cycles_and_paths() {
        for g in (3..10).map(cycle).chain((1..10).map(path)) {
            let f = enumerate_maximum_independent_sets(&g).unwrap();
            assert_eq!(f.alpha, alpha_bruteforce(&g));
            let mut got: Vec<_> = f.sets.iter().map(|s| s.to_vec()).collect();
            got.sort();
            assert_eq!(got, maximum_independent_sets_bruteforce(&g));
        }
    }

    #[test]
    fn budget_is_enforced() {
        // C8 has two maximum independent sets.
        assert_eq!(
            enumerate_maximum_independent_sets_with_budget(&cycle(8), 1),
            Err(Error::BudgetExceeded { limit: 1 })
        );
        assert_eq!(enumerate_maximum_independent_sets_with_budget(&cycle(8), 2).unwrap().len(), 2);
    }

    #[test]
    fn independent_vertex_covers() {
        let k2 = complete(2);
        assert!(is_independent_vertex_cover(&k2, VertexSet::from_bits(0b1)));
        let c4 = cycle(4);
        let side = c4.bipartition().unwrap().left;
        assert!(is_independent_vertex_cover(&c4, side));
        assert!(!is_independent_vertex_cover(&c4, VertexSet::from_bits(0b11)));
    }

    #[test]
    fn sumi_decisions() {
        assert!(!is_sumi_graph(&cycle(4)).unwrap());
        assert!(is_sumi_graph(&path(3)).unwrap());
        assert!(is_sumi_graph(&Graph::empty(1).unwrap()).unwrap());
        assert!(!is_sumi_graph(&complete(2)).unwrap());
    }

    #[test]
    fn leaf_parity_on_paths() {
        assert!(sumi_tree_leaf_check(&path(3)).unwrap());
        assert!(!sumi_tree_leaf_check(&path(4)).unwrap());
        assert_eq!(sumi_tree_leaf_check(&cycle(4)), Err(Error::NotATree));
        assert_eq!(sumi_tree_leaf_check(&Graph::empty(2).unwrap()), Err(Error::NotATree));
    }
}
