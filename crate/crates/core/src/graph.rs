//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one `u64` row per vertex, so a [`Graph`] holds at
//! most [`MAX_VERTICES`] vertices. Every algorithm in the crate works on these
//! bit rows directly.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            assert!(v < 64, "vertex {v} does not fit in a VertexSet");
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Vertex degrees sorted nondecreasingly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_unsorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        DegreeSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// The two colour classes of a proper 2-colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Optional vertex names are carried along for display only; equality and
/// hashing look at the labeled structure alone.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n], names: None })
    }

    /// Builds a graph from an edge list, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::BadVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj, names: None }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    /// Attaches display names, one per vertex.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Graph> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.n {
            return Err(Error::BadParameter(format!(
                "{} names for {} vertices",
                names.len(),
                self.n
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Graph {
        self.names = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !full_mask(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(full_mask(self.n))
    }

    /// Checks that every listed vertex is in range and builds the set.
    pub fn vertex_set(&self, members: &[usize]) -> Result<VertexSet> {
        let mut s = VertexSet::empty();
        for &v in members {
            if v >= self.n {
                return Err(Error::BadVertex { vertex: v, n: self.n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `v`: its attached name, or the index.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    /// Resolves a list of vertex names; `None` if any name is unknown.
    pub fn set_by_names(&self, names: &[&str]) -> Option<VertexSet> {
        names.iter().map(|s| self.vertex_by_name(s)).collect::<Option<Vec<_>>>().map(|v| v.into_iter().collect())
    }

    /// Formats a vertex set using display names, e.g. `{a1, b3}`.
    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<String> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn degree_sum(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.degree(v)).sum()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        let names = self.names.as_ref().map(|names| {
            let mut out = vec![String::new(); self.n];
            for (v, name) in names.iter().enumerate() {
                out[perm[v]] = name.clone();
            }
            out
        });
        Graph { n: self.n, adj, names }
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (v, &row) in other.adj.iter().enumerate() {
            g.adj[self.n + v] = row << self.n;
        }
        if self.names.is_some() || other.names.is_some() {
            let names = (0..self.n)
                .map(|v| self.name(v))
                .chain((0..other.n).map(|v| match &other.names {
                    Some(names) => names[v].clone(),
                    None => (self.n + v).to_string(),
                }))
                .collect();
            g.names = Some(names);
        }
        Ok(g)
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeated(&self, copies: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..copies {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj, names: self.names.clone() }
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0u64;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// A proper 2-colouring if one exists. BFS from the lowest uncoloured
    /// vertex, which always lands in `left`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let here = side[v].unwrap();
                for w in self.neighbors(v).iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!here);
                            queue.push_back(w);
                        }
                        Some(s) if s == here => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::empty();
        let mut right = VertexSet::empty();
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(false) {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `s`, relabeled to `0..s.len()` in ascending order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let members = s.to_vec();
        let mut g = Graph::empty(members.len()).expect("subset of a valid graph");
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        if self.names.is_some() {
            g.names = Some(members.iter().map(|&v| self.name(v)).collect());
        }
        g
    }
}

/// Free-function spelling of [`Graph::from_edges`].
pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_builds_p4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.degree_sequence().values(), &[1, 1, 2, 2]);
    }

    #[test]
    fn k1_has_single_zero_degree() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.degree_sequence().values(), &[0]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(Error::BadVertex { vertex: 3, n: 3 }));
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn empty_graph_is_valid() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(g.m(), 0);
        assert!(g.components().is_empty());
        assert!(g.degree_sequence().is_empty());
    }

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        let b = cycle(4).bipartition().unwrap();
        assert_eq!((b.left.len(), b.right.len()), (2, 2));
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn union_shifts_second_operand() {
        let k1 = Graph::empty(1).unwrap();
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = k1.disjoint_union(&k2).unwrap();
        assert_eq!((g.n(), g.m()), (3, 1));
        assert!(g.has_edge(1, 2));

        let three = k2.repeated(3).unwrap();
        assert_eq!((three.n(), three.m()), (6, 3));
        assert!(three.degree_sequence().values().iter().all(|&d| d == 1));
    }

    #[test]
    fn complement_is_an_involution() {
        let p5 = path(5);
        assert_eq!(p5.complement().complement(), p5);
        assert_eq!(p5.complement().m(), 10 - 4);
    }

    #[test]
    fn components_partition_vertices() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = k2.disjoint_union(&path(3)).unwrap();
        let sizes: Vec<_> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(path(5).components().len(), 1);
        assert_eq!(Graph::empty(3).unwrap().components().len(), 3);
    }

    #[test]
    fn permute_and_names_travel_together() {
        let g = path(3).with_names(["a", "b", "c"]).unwrap();
        let h = g.permute(&[2, 0, 1]);
        assert_eq!(h.vertex_by_name("b"), Some(0));
        assert!(h.has_edge(2, 0) && h.has_edge(0, 1));
        assert_eq!(h.format_set(h.vertices()), "{b, c, a}");
    }

    #[test]
    fn vertex_set_iterates_in_order() {
        let s: VertexSet = [5, 1, 63].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 5, 63]);
        assert_eq!(s.len(), 3);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,5,63]");
    }
}
