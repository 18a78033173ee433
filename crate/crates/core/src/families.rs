//! Labeled generators for the counterexample families, the small named
//! graphs they are compared against, and the standard graphs `K_n`,
//! `K_{p,q}`, `P_n` and `C_n`.
//!
//! Every generator attaches vertex names (`a1`, `b3`, `x2`, ...) so that
//! reports can be read against hand computations. Vertex order is fixed:
//! the `a` side first, then `b`, then the `x` chain, then the `y` chain.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Builds a graph from vertex names and name pairs.
fn named(names: &[String], edges: &[(String, String)]) -> Result<Graph> {
    let index = |s: &str| {
        names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| Error::BadParameter(format!("no vertex named {s}")))
    };
    let pairs = edges
        .iter()
        .map(|(u, v)| Ok((index(u)?, index(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(names.len(), &pairs)?.with_names(names.iter().cloned())
}

fn labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

fn e(u: impl Into<String>, v: impl Into<String>) -> (String, String) {
    (u.into(), v.into())
}

fn fixed_graph(names: &[&str], edges: &[(&str, &str)]) -> Graph {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let edges: Vec<_> = edges.iter().map(|&(u, v)| e(u, v)).collect();
    named(&names, &edges).expect("catalog entries are well formed")
}

/// The spider with centre `v` and `k` legs `v-b_i-a_i`; order `2k+1`.
pub fn spider_odd(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameter("spider_odd needs k >= 1".into()));
    }
    let mut names = vec!["v".to_string()];
    names.extend(labels("b", k));
    names.extend(labels("a", k));
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push(e("v", format!("b{i}")));
        edges.push(e(format!("b{i}"), format!("a{i}")));
    }
    named(&names, &edges)
}

/// The path `v1-v4-v2` with `v4-v3` attached, and `k` legs `v3-b_i-a_i`;
/// order `2k+4`.
pub fn spider_even(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameter("spider_even needs k >= 1".into()));
    }
    let mut names = labels("v", 4);
    names.extend(labels("b", k));
    names.extend(labels("a", k));
    let mut edges = vec![e("v1", "v4"), e("v2", "v4"), e("v4", "v3")];
    for i in 1..=k {
        edges.push(e("v3", format!("b{i}")));
        edges.push(e(format!("b{i}"), format!("a{i}")));
    }
    named(&names, &edges)
}

fn core_edges(a_count: usize, adjacency: &[(usize, &[usize])]) -> Vec<(String, String)> {
    let mut edges = Vec::new();
    for &(b, targets) in adjacency {
        for &a in targets {
            debug_assert!(a <= a_count);
            edges.push(e(format!("a{a}"), format!("b{b}")));
        }
    }
    edges
}

/// Zigzag chain `x_i-y_i`, `x_i-y_{i+1}` hung off `y1-anchor`.
fn chain_edges(k: usize, anchor: &str) -> Vec<(String, String)> {
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push(e(format!("x{i}"), format!("y{i}")));
        if i < k {
            edges.push(e(format!("x{i}"), format!("y{}", i + 1)));
        }
    }
    if k >= 1 {
        edges.push(e("y1", anchor));
    }
    edges
}

/// Complete `x`-`y` join, `x` to every `b`, `y` to every `a`, the `y`
/// path, and `y1-b4`.
fn ke_cross_edges(k: usize, a_count: usize) -> Vec<(String, String)> {
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            edges.push(e(format!("x{i}"), format!("y{j}")));
        }
        for j in 1..=4 {
            edges.push(e(format!("x{i}"), format!("b{j}")));
        }
        for j in 1..=a_count {
            edges.push(e(format!("y{i}"), format!("a{j}")));
        }
        if i < k {
            edges.push(e(format!("y{i}"), format!("y{}", i + 1)));
        }
    }
    if k >= 1 {
        edges.push(e("y1", "b4"));
    }
    edges
}

fn family_names(a_count: usize, k: usize) -> Vec<String> {
    let mut names = labels("a", a_count);
    names.extend(labels("b", 4));
    names.extend(labels("x", k));
    names.extend(labels("y", k));
    names
}

const EVEN_CORE: [(usize, &[usize]); 4] = [(4, &[1, 2, 3, 4]), (3, &[1, 2, 3, 4]), (2, &[3, 4]), (1, &[1, 4])];
const ODD_CORE: [(usize, &[usize]); 4] =
    [(4, &[1, 2, 3, 4, 5]), (3, &[1, 2, 3, 4, 5]), (2, &[4, 5]), (1, &[2, 5])];

/// Bipartite graph of order `2k+8`: the 12-edge core on `a1..a4`,
/// `b1..b4` plus the zigzag chain anchored at `a4`.
pub fn bipartite_even(k: usize) -> Result<Graph> {
    let mut edges = core_edges(4, &EVEN_CORE);
    edges.extend(chain_edges(k, "a4"));
    named(&family_names(4, k), &edges)
}

/// Bipartite graph of order `2k+9`: the 14-edge core on `a1..a5`,
/// `b1..b4` plus the zigzag chain anchored at `a5`.
pub fn bipartite_odd(k: usize) -> Result<Graph> {
    let mut edges = core_edges(5, &ODD_CORE);
    edges.extend(chain_edges(k, "a5"));
    named(&family_names(5, k), &edges)
}

/// Non-bipartite KE graph of order `2k+8` with `k^2+9k+13` edges.
pub fn ke_even(k: usize) -> Result<Graph> {
    let mut edges = core_edges(4, &EVEN_CORE);
    edges.push(e("b3", "b4"));
    edges.extend(ke_cross_edges(k, 4));
    named(&family_names(4, k), &edges)
}

/// Non-bipartite KE graph of order `2k+9` with `k^2+10k+15` edges.
pub fn ke_odd(k: usize) -> Result<Graph> {
    let mut edges = core_edges(5, &ODD_CORE);
    edges.push(e("b3", "b4"));
    edges.extend(ke_cross_edges(k, 5));
    named(&family_names(5, k), &edges)
}

/// Fixed example graphs, with vertices named as in the hand computations.
///
/// | id         | n  | edges |
/// |------------|----|-------|
/// | `nonke-h3` | 5  | t1-b2, b1-b2, b2-b3, b1-t1, b2-t2, b3-t2 |
/// | `nonke-h2` | 5  | p-q, q-r, p-s, p-t, s-q, s-r, q-t, r-t |
/// | `ke6-h4`   | 6  | b1-t2, b1-b2, b2-b3, b1-t1, b2-t2, b2-t3, b3-t3 |
/// | `ke6-h3`   | 6  | b1-b, b-b3, b1-a, b-t2, b-t3, b3-t3, a-t3, a-t2 |
/// | `ke7-h4`   | 7  | b1-b2, b2-b3, b3-b4, t1-b2, b2-t2, t2-t3, t3-b4 |
/// | `ke8-h6`   | 8  | b1-b2, b2-b3, b3-b4, t1-b2, b2-t2, b2-t3, t2-t3, t2-b3, b3-t3, b3-t4 |
/// | `tree8`    | 8  | v3-v1, v3-v2, v3-v4, v4-v5, v5-v6, v7-v6, v6-v8 |
/// | `tree6`    | 6  | b1-a1, b1-a2, b1-a3, b2-a2, b3-a3 |
/// | `tree11`   | 11 | x1-u1, u1-u2, u2-u3, u4-x7, x2-u1, x3-u2, u2-x4, u3-x5, u4-x6, u3-x6 |
/// | `paw`      | 4  | triangle c-d-e with pendant f-c (alias `K3+e`) |
/// | `diamond`  | 4  | K4 minus the edge f-g (alias `K4-e`) |
///
/// In `ke6-h3` the top-left vertex is `a` and the middle bottom vertex is
/// `b`; `{a, b}` is a maximal independent set that is maximal annihilating
/// but not maximum.
pub const FIXED_IDS: [&str; 11] = [
    "nonke-h3", "nonke-h2", "ke6-h4", "ke6-h3", "ke7-h4", "ke8-h6", "tree8", "tree6", "tree11", "paw", "diamond",
];

pub fn fixed(id: &str) -> Result<Graph> {
    let g = match id {
        "nonke-h3" => fixed_graph(
            &["t1", "t2", "b1", "b2", "b3"],
            &[("t1", "b2"), ("b1", "b2"), ("b2", "b3"), ("b1", "t1"), ("b2", "t2"), ("b3", "t2")],
        ),
        "nonke-h2" => fixed_graph(
            &["p", "q", "r", "s", "t"],
            &[("p", "q"), ("q", "r"), ("p", "s"), ("p", "t"), ("s", "q"), ("s", "r"), ("q", "t"), ("r", "t")],
        ),
        "ke6-h4" => fixed_graph(
            &["t1", "t2", "t3", "b1", "b2", "b3"],
            &[("b1", "t2"), ("b1", "b2"), ("b2", "b3"), ("b1", "t1"), ("b2", "t2"), ("b2", "t3"), ("b3", "t3")],
        ),
        "ke6-h3" => fixed_graph(
            &["a", "t2", "t3", "b1", "b", "b3"],
            &[
                ("b1", "b"),
                ("b", "b3"),
                ("b1", "a"),
                ("b", "t2"),
                ("b", "t3"),
                ("b3", "t3"),
                ("a", "t3"),
                ("a", "t2"),
            ],
        ),
        "ke7-h4" => fixed_graph(
            &["t1", "t2", "t3", "b1", "b2", "b3", "b4"],
            &[("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("t1", "b2"), ("b2", "t2"), ("t2", "t3"), ("t3", "b4")],
        ),
        "ke8-h6" => fixed_graph(
            &["t1", "t2", "t3", "t4", "b1", "b2", "b3", "b4"],
            &[
                ("b1", "b2"),
                ("b2", "b3"),
                ("b3", "b4"),
                ("t1", "b2"),
                ("b2", "t2"),
                ("b2", "t3"),
                ("t2", "t3"),
                ("t2", "b3"),
                ("b3", "t3"),
                ("b3", "t4"),
            ],
        ),
        "tree8" => fixed_graph(
            &["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"],
            &[("v3", "v1"), ("v3", "v2"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v7", "v6"), ("v6", "v8")],
        ),
        "tree6" => fixed_graph(
            &["a1", "a2", "a3", "b1", "b2", "b3"],
            &[("b1", "a1"), ("b1", "a2"), ("b1", "a3"), ("b2", "a2"), ("b3", "a3")],
        ),
        "tree11" => fixed_graph(
            &["x1", "x2", "x3", "x4", "x5", "x6", "x7", "u1", "u2", "u3", "u4"],
            &[
                ("x1", "u1"),
                ("u1", "u2"),
                ("u2", "u3"),
                ("u4", "x7"),
                ("x2", "u1"),
                ("x3", "u2"),
                ("u2", "x4"),
                ("u3", "x5"),
                ("u4", "x6"),
                ("u3", "x6"),
            ],
        ),
        "paw" | "K3+e" => fixed_graph(&["c", "d", "e", "f"], &[("c", "d"), ("d", "e"), ("c", "e"), ("f", "c")]),
        "diamond" | "K4-e" => fixed_graph(
            &["f", "c", "g", "d"],
            &[("f", "c"), ("f", "d"), ("c", "g"), ("c", "d"), ("g", "d")],
        ),
        _ => return Err(Error::NotFound(id.to_string())),
    };
    Ok(g)
}

/// `K_n`, `K_{p,q}`, `P_n` or `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Standard {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
}

impl Standard {
    pub fn build(self) -> Result<Graph> {
        match self {
            Standard::Complete(n) => {
                if n == 0 {
                    return Err(Error::BadParameter("K_n needs n >= 1".into()));
                }
                let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                Graph::from_edges(n, &edges)
            }
            Standard::CompleteBipartite(p, q) => {
                if p == 0 || q == 0 {
                    return Err(Error::BadParameter("K_{p,q} needs p, q >= 1".into()));
                }
                let edges: Vec<_> = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect();
                Graph::from_edges(p + q, &edges)
            }
            Standard::Path(n) => {
                if n == 0 {
                    return Err(Error::BadParameter("P_n needs n >= 1".into()));
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            Standard::Cycle(n) => {
                if n < 3 {
                    return Err(Error::BadParameter("C_n needs n >= 3".into()));
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((0, n - 1));
                Graph::from_edges(n, &edges)
            }
        }
    }
}

impl FromStr for Standard {
    type Err = Error;

    /// Accepts `K5`, `K3,4`, `P5` and `C6`.
    fn from_str(s: &str) -> Result<Standard> {
        let bad = || Error::BadParameter(format!("unrecognized standard graph `{s}`"));
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (kind, rest) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        match kind {
            "K" => match rest.split_once(',') {
                Some((p, q)) => Ok(Standard::CompleteBipartite(number(p)?, number(q)?)),
                None => Ok(Standard::Complete(number(rest)?)),
            },
            "P" => Ok(Standard::Path(number(rest)?)),
            "C" => Ok(Standard::Cycle(number(rest)?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Standard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Standard::Complete(n) => write!(f, "K{n}"),
            Standard::CompleteBipartite(p, q) => write!(f, "K{p},{q}"),
            Standard::Path(n) => write!(f, "P{n}"),
            Standard::Cycle(n) => write!(f, "C{n}"),
        }
    }
}

/// The six parameterized families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SpiderOdd,
    SpiderEven,
    BipartiteEven,
    BipartiteOdd,
    KeEven,
    KeOdd,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::SpiderOdd,
        Family::SpiderEven,
        Family::BipartiteEven,
        Family::BipartiteOdd,
        Family::KeEven,
        Family::KeOdd,
    ];

    /// Name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::SpiderOdd => "spider-odd",
            Family::SpiderEven => "spider-even",
            Family::BipartiteEven => "bip-even",
            Family::BipartiteOdd => "bip-odd",
            Family::KeEven => "ke-even",
            Family::KeOdd => "ke-odd",
        }
    }

    pub fn from_cli_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.cli_name() == s)
    }

    pub fn build(self, k: usize) -> Result<Graph> {
        match self {
            Family::SpiderOdd => spider_odd(k),
            Family::SpiderEven => spider_even(k),
            Family::BipartiteEven => bipartite_even(k),
            Family::BipartiteOdd => bipartite_odd(k),
            Family::KeEven => ke_even(k),
            Family::KeOdd => ke_odd(k),
        }
    }

    /// Smallest `k` the generator accepts.
    pub fn min_k(self) -> usize {
        match self {
            Family::SpiderOdd | Family::SpiderEven => 1,
            _ => 0,
        }
    }

    /// Smallest `k` for which the instance is claimed to satisfy condition
    /// (ii) with `alpha < h` and `h >= n/2`.
    pub fn counterexample_from(self) -> usize {
        match self {
            Family::SpiderOdd => 4,
            Family::SpiderEven => 3,
            _ => 0,
        }
    }

    /// Closed-form invariants of the instance with parameter `k`.
    pub fn expected(self, k: usize) -> Result<ClosedForm> {
        if k < self.min_k() {
            return Err(Error::BadParameter(format!("{} needs k >= {}", self.cli_name(), self.min_k())));
        }
        let cf = match self {
            Family::SpiderOdd => ClosedForm {
                n: 2 * k + 1,
                m: 2 * k,
                alpha: k + 1,
                // For k = 1 the centre has degree 1 and sorts among the
                // leaves, so the formula undercounts.
                h: (k >= 2).then_some(k + k / 2),
            },
            Family::SpiderEven => ClosedForm { n: 2 * k + 4, m: 2 * k + 3, alpha: k + 3, h: Some(k + 2 + k.div_ceil(2)) },
            Family::BipartiteEven => ClosedForm {
                n: 2 * k + 8,
                m: 2 * k + 12,
                alpha: k + 4,
                h: Some(match k {
                    0 => 5,
                    1 => 6,
                    2 => 8,
                    _ => k + 6,
                }),
            },
            Family::BipartiteOdd => ClosedForm {
                n: 2 * k + 9,
                m: 2 * k + 14,
                alpha: k + 5,
                h: Some(match k {
                    0 => 6,
                    1 => 7,
                    2 => 9,
                    _ => k + 7,
                }),
            },
            Family::KeEven => ClosedForm { n: 2 * k + 8, m: k * k + 9 * k + 13, alpha: k + 4, h: Some(k + 5) },
            Family::KeOdd => ClosedForm { n: 2 * k + 9, m: k * k + 10 * k + 15, alpha: k + 5, h: Some(k + 6) },
        };
        Ok(cf)
    }

    /// The labeled maximum independent sets claimed for small `k`, by
    /// vertex name. `None` where no explicit family is known.
    pub fn expected_mis_names(self, k: usize) -> Option<Vec<Vec<String>>> {
        let xs = labels("x", k);
        match self {
            Family::SpiderOdd if k >= 1 => {
                let mut s = labels("a", k);
                s.push("v".into());
                Some(vec![s])
            }
            Family::SpiderEven if k >= 1 => {
                let mut s = labels("a", k);
                s.extend(labels("v", 3));
                Some(vec![s])
            }
            Family::BipartiteEven if k == 0 => Some(vec![labels("a", 4), labels("b", 4)]),
            Family::BipartiteOdd | Family::KeOdd if k <= 4 => {
                let mut s = xs;
                s.extend(labels("a", 5));
                Some(vec![s])
            }
            Family::KeEven if k <= 4 => {
                let mut s = xs;
                s.extend(labels("a", 4));
                Some(vec![s])
            }
            _ => None,
        }
    }
}

/// Closed-form `n`, `m`, `alpha` and, where a formula applies, `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub h: Option<usize>,
}

/// A graph request as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Parameterized(Family),
    Fixed(String),
    Standard(Standard),
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `spider-odd`, ..., `ke-odd`, `fixed:<id>` or `std:<kind>`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        if let Some(id) = s.strip_prefix("fixed:") {
            fixed(id)?;
            return Ok(FamilySpec::Fixed(id.to_string()));
        }
        if let Some(kind) = s.strip_prefix("std:") {
            return Ok(FamilySpec::Standard(kind.parse()?));
        }
        Family::from_cli_name(s).map(FamilySpec::Parameterized).ok_or_else(|| Error::NotFound(s.to_string()))
    }
}

impl FamilySpec {
    /// Whether the spec needs a `k` parameter.
    pub fn takes_k(&self) -> bool {
        matches!(self, FamilySpec::Parameterized(_))
    }

    pub fn build(&self, k: Option<usize>) -> Result<Graph> {
        match self {
            FamilySpec::Parameterized(f) => {
                let k = k.ok_or_else(|| Error::BadParameter(format!("{} needs --k", f.cli_name())))?;
                f.build(k)
            }
            FamilySpec::Fixed(id) => fixed(id),
            FamilySpec::Standard(s) => s.build(),
        }
    }

    pub fn expected(&self, k: Option<usize>) -> Option<ClosedForm> {
        match (self, k) {
            (FamilySpec::Parameterized(f), Some(k)) => f.expected(k).ok(),
            _ => None,
        }
    }
}

/// Resolves a list of names to a vertex set, panicking on unknown names.
/// Only meant for the catalog's own well-formed names.
pub fn names_to_set(g: &Graph, names: &[String]) -> VertexSet {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    g.set_by_names(&refs).expect("names come from the generator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annihilation::annihilation_number;
    use crate::independence::independence_number;

    #[test]
    fn spider_small_cases() {
        assert_eq!(spider_odd(0), Err(Error::BadParameter("spider_odd needs k >= 1".into())));
        let p3 = spider_odd(1).unwrap();
        assert_eq!(p3.without_names(), Standard::Path(3).build().unwrap());
        let s = spider_even(1).unwrap();
        assert_eq!(s.degree_sequence().values(), &[1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn core_degree_sequences() {
        assert_eq!(bipartite_even(0).unwrap().degree_sequence().values(), &[2, 2, 2, 3, 3, 4, 4, 4]);
        assert_eq!(bipartite_even(1).unwrap().degree_sequence().values(), &[1, 2, 2, 2, 2, 3, 3, 4, 4, 5]);
        assert_eq!(bipartite_odd(0).unwrap().degree_sequence().values(), &[2, 2, 2, 2, 3, 3, 4, 5, 5]);
        assert_eq!(ke_even(0).unwrap().degree_sequence().values(), &[2, 2, 2, 3, 3, 4, 5, 5]);
        assert_eq!(ke_odd(0).unwrap().degree_sequence().values(), &[2, 2, 2, 2, 3, 3, 4, 6, 6]);
    }

    #[test]
    fn ke_even_vertex_degrees() {
        for k in 2..6 {
            let g = ke_even(k).unwrap();
            let deg = |name: &str| g.degree(g.vertex_by_name(name).unwrap());
            assert_eq!(deg("b4"), k + 6);
            assert_eq!(deg("y1"), k + 6);
            assert_eq!(deg("x1"), k + 4);
            assert_eq!(deg("a4"), k + 4);
        }
    }

    #[test]
    fn fixed_catalog_resolves() {
        for id in FIXED_IDS {
            let g = fixed(id).unwrap();
            assert!(g.names().is_some());
        }
        assert_eq!(fixed("K3+e").unwrap(), fixed("paw").unwrap());
        assert_eq!(fixed("nope"), Err(Error::NotFound("nope".into())));
        let t8 = fixed("tree8").unwrap();
        assert_eq!((t8.m(), annihilation_number(&t8), independence_number(&t8)), (7, 5, 5));
    }

    #[test]
    fn standard_parsing() {
        assert_eq!("K5".parse::<Standard>().unwrap(), Standard::Complete(5));
        assert_eq!("K3,4".parse::<Standard>().unwrap(), Standard::CompleteBipartite(3, 4));
        assert_eq!("P1".parse::<Standard>().unwrap().build().unwrap(), Graph::empty(1).unwrap());
        assert!("C2".parse::<Standard>().unwrap().build().is_err());
        assert!("Q4".parse::<Standard>().is_err());
        assert!("K".parse::<Standard>().is_err());
        assert_eq!(Standard::CompleteBipartite(3, 4).to_string(), "K3,4");
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("ke-even".parse::<FamilySpec>().unwrap(), FamilySpec::Parameterized(Family::KeEven));
        assert_eq!("fixed:tree6".parse::<FamilySpec>().unwrap(), FamilySpec::Fixed("tree6".into()));
        assert!("fixed:nothing".parse::<FamilySpec>().is_err());
        assert!("ke-even".parse::<FamilySpec>().unwrap().build(None).is_err());
        assert_eq!(
            "std:C6".parse::<FamilySpec>().unwrap().build(None).unwrap(),
            Standard::Cycle(6).build().unwrap()
        );
    }
}
