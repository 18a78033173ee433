//! Brute-force reference computations.
//!
//! These share nothing with the fast algorithms beyond the [`Graph`] type and
//! are only meant for small inputs. They back the cross-checks in the test
//! suites and in [`crate::verify`].

use crate::graph::Graph;

fn subset_is_independent(g: &Graph, mask: u64) -> bool {
    let members: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Largest independent subset, by trying all `2^n` subsets. Panics for n > 20.
pub fn alpha_bruteforce(g: &Graph) -> usize {
    assert!(g.n() <= 20, "alpha_bruteforce is exponential");
    (0u64..1 << g.n())
        .filter(|&mask| subset_is_independent(g, mask))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Every maximum independent set as a sorted vertex list. Panics for n > 20.
pub fn maximum_independent_sets_bruteforce(g: &Graph) -> Vec<Vec<usize>> {
    let alpha = alpha_bruteforce(g);
    let mut out: Vec<Vec<usize>> = (0u64..1 << g.n())
        .filter(|&mask| mask.count_ones() as usize == alpha && subset_is_independent(g, mask))
        .map(|mask| (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Largest annihilating vertex set, i.e. the largest `|A|` with
/// `deg(A) <= m`, by trying all subsets. Panics for n > 20.
pub fn annihilation_number_bruteforce(g: &Graph) -> usize {
    assert!(g.n() <= 20, "annihilation_number_bruteforce is exponential");
    let deg = g.degrees();
    let m = g.m();
    (0u64..1 << g.n())
        .filter(|&mask| (0..g.n()).filter(|&v| mask >> v & 1 == 1).map(|v| deg[v]).sum::<usize>() <= m)
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether some cycle of odd length exists, by depth-first search over all
/// simple paths. Exponential; intended for n <= 8.
pub fn has_odd_cycle_bruteforce(g: &Graph) -> bool {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: &mut Vec<bool>) -> bool {
        let last = *path.last().unwrap();
        for next in 0..g.n() {
            if !g.has_edge(last, next) {
                continue;
            }
            if next == start && path.len() >= 3 && path.len() % 2 == 1 {
                return true;
            }
            if next > start && !on_path[next] {
                on_path[next] = true;
                path.push(next);
                if extend(g, start, path, on_path) {
                    return true;
                }
                path.pop();
                on_path[next] = false;
            }
        }
        false
    }
    (0..g.n()).any(|start| {
        let mut on_path = vec![false; g.n()];
        on_path[start] = true;
        extend(g, start, &mut vec![start], &mut on_path)
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Calls `f` with every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_bruteforce(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        if !found && a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])) {
            found = true;
        }
    });
    found
}

/// Smallest upper-triangle bit string over all relabelings; equal values
/// mean isomorphic graphs. Factorial time, intended for n <= 7.
pub fn canonical_code_bruteforce(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let edges = g.edges();
    let mut best: Option<Vec<bool>> = None;
    for_each_permutation(n, |p| {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in &edges {
            adj[p[u]][p[v]] = true;
            adj[p[v]][p[u]] = true;
        }
        let code: Vec<bool> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| adj[i][j]).collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}
