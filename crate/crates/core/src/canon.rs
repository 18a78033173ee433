//! Canonical labeling for isomorphism dedup of small graphs.
//!
//! Vertices are partitioned by iterated neighbour counts (equitable
//! refinement), then every way of individualizing the first non-singleton
//! cell is explored. Each discrete leaf fixes an ordering of the vertices;
//! the ordering whose upper-triangle bit string is largest wins. Both the
//! refinement and the cell choice depend only on the partition structure, so
//! the result does not depend on the input labeling.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::graph6::encode_graph6;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 10;

/// Labeling-invariant key: the graph6 bytes of the canonically relabeled
/// graph. Equal keys mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// Key of a graph that is already canonically labeled.
    pub(crate) fn of_canonical(g: &Graph) -> CanonicalForm {
        CanonicalForm(encode_graph6(g).into_bytes())
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |acc, &v| acc | bit(v));
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.row(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    changed = true;
                }
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

fn code(g: &Graph, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            c = (c << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    c
}

fn search(g: &Graph, mut cells: Cells, best: &mut Option<(u64, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best);
    }
}

/// Canonical position of each vertex: vertex `v` goes to `labeling[v]`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::Unsupported(format!(
            "canonical form for n = {n} (limit {MAX_CANON_VERTICES})"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok(labeling)
}

/// `g` relabeled canonically (names follow their vertices).
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(g.permute(&canonical_labeling(g)?))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm::of_canonical(&canonical_graph(g)?))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::isomorphic_bruteforce;

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn four_vertex_classes_are_eleven() {
        // Brute-force oracle: dedup all 64 labeled graphs pairwise by
        // permutation search, then compare with canonical keys.
        let pairs: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        let all: Vec<Graph> = (0u32..64)
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                Graph::from_edges(4, &edges).unwrap()
            })
            .collect();
        let mut reps: Vec<Graph> = Vec::new();
        for g in &all {
            if !reps.iter().any(|r| isomorphic_bruteforce(r, g)) {
                reps.push(g.clone());
            }
        }
        assert_eq!(reps.len(), 11);
        let mut keys: Vec<_> = reps.iter().map(|g| canonical_form(g).unwrap()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 11);
        for g in &all {
            let k = canonical_form(g).unwrap();
            let rep = reps.iter().find(|r| isomorphic_bruteforce(r, g)).unwrap();
            assert_eq!(k, canonical_form(rep).unwrap());
        }
    }

    #[test]
    fn order_limit_is_enforced() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::Unsupported(_))));
        assert!(canonical_form(&Graph::empty(10).unwrap()).is_ok());
    }
}
