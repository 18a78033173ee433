//! Annihilation numbers of threshold sequences and graphs, and the
//! annihilating / maximal / maximum predicates on vertex sets.
//!
//! Graph-level code is integer-only: the threshold is `m(G)` and sums are
//! degree sums. [`ThresholdSequence`] is the real-valued abstraction over
//! an arbitrary sorted sequence and threshold; subsequences there are index
//! sets, so repeated values never get confused with each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest sequence length accepted by [`verify_maximum_implies_maximal`].
pub const SEQUENCE_BRUTEFORCE_LIMIT: usize = 20;
/// Largest order accepted by [`enumerate_maximum_annihilating_sets`].
pub const ANNIHILATING_ENUMERATION_LIMIT: usize = 16;

/// A nondecreasing real sequence with a threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdSequence {
    values: Vec<f64>,
    theta: f64,
}

impl ThresholdSequence {
    /// Fails unless `values` is sorted nondecreasingly and NaN-free.
    pub fn new(values: Vec<f64>, theta: f64) -> Result<Self> {
        if theta.is_nan() || values.iter().any(|v| v.is_nan()) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedSequence);
        }
        Ok(ThresholdSequence { values, theta })
    }

    pub fn from_unsorted(mut values: Vec<f64>, theta: f64) -> Result<Self> {
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::UnsortedSequence);
        }
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ThresholdSequence::new(values, theta)
    }

    /// Integer degrees against an integer threshold.
    pub fn from_degrees(values: &[usize], theta: usize) -> Self {
        ThresholdSequence::from_unsorted(values.iter().map(|&d| d as f64).collect(), theta as f64)
            .expect("integers are never NaN")
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Largest `k` with `values[0] + ... + values[k-1] <= theta`.
pub fn annihilation_number_of_sequence(d: &ThresholdSequence) -> usize {
    let mut sum = 0.0;
    let mut k = 0;
    // Prefix sums of a sorted sequence are not monotone when values are
    // negative, so keep scanning to the end.
    for (i, &v) in d.values.iter().enumerate() {
        sum += v;
        if sum <= d.theta {
            k = i + 1;
        }
    }
    k
}

/// Classification of an index subset of a [`ThresholdSequence`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SubsequenceVerdict {
    pub is_annihilating: bool,
    pub is_maximal: bool,
    pub is_maximum: bool,
    pub sum: f64,
}

/// Verdict for the subsequence picked out by `indices` (duplicates ignored).
pub fn subsequence_verdict(d: &ThresholdSequence, indices: &[usize]) -> Result<SubsequenceVerdict> {
    let mut picked = vec![false; d.len()];
    for &i in indices {
        if i >= d.len() {
            return Err(Error::BadParameter(format!("index {i} out of range for length {}", d.len())));
        }
        picked[i] = true;
    }
    let size = picked.iter().filter(|&&p| p).count();
    let sum: f64 = d.values.iter().zip(&picked).filter(|(_, &p)| p).map(|(v, _)| v).sum();
    let is_annihilating = sum <= d.theta;
    let is_maximal = is_annihilating
        && d.values.iter().zip(&picked).filter(|(_, &p)| !p).all(|(v, _)| sum + v > d.theta);
    let is_maximum = is_annihilating && size == annihilation_number_of_sequence(d);
    Ok(SubsequenceVerdict { is_annihilating, is_maximal, is_maximum, sum })
}

/// Checks by brute force that every maximum annihilating subsequence is
/// maximal: all index subsets of size `h(D, theta)` are tried.
pub fn verify_maximum_implies_maximal(d: &ThresholdSequence) -> Result<bool> {
    let len = d.len();
    if len > SEQUENCE_BRUTEFORCE_LIMIT {
        return Err(Error::Unsupported(format!(
            "subsequence enumeration for length {len} (limit {SEQUENCE_BRUTEFORCE_LIMIT})"
        )));
    }
    let h = annihilation_number_of_sequence(d) as u32;
    for mask in 0u32..1 << len {
        if mask.count_ones() != h {
            continue;
        }
        let sum: f64 = (0..len).filter(|&i| mask >> i & 1 == 1).map(|i| d.values[i]).sum();
        if sum > d.theta {
            continue;
        }
        let extendable = (0..len).any(|i| mask >> i & 1 == 0 && sum + d.values[i] <= d.theta);
        if extendable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// h(G): the annihilation number of the degree sequence against `m(G)`.
pub fn annihilation_number(g: &Graph) -> usize {
    let m = g.m();
    let mut sum = 0;
    let mut k = 0;
    for &d in g.degree_sequence().values() {
        sum += d;
        if sum > m {
            break;
        }
        k += 1;
    }
    k
}

/// `deg(A)`, the degree total of the members of `a`.
pub fn degree_sum(g: &Graph, a: VertexSet) -> usize {
    g.degree_sum(a)
}

/// The three annihilation predicates for one vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilationVerdict {
    pub is_annihilating: bool,
    pub is_maximal: bool,
    pub is_maximum: bool,
    pub deg_sum: usize,
}

pub fn annihilation_verdict(g: &Graph, a: VertexSet) -> AnnihilationVerdict {
    annihilation_verdict_with_h(g, a, annihilation_number(g))
}

/// Same as [`annihilation_verdict`] with `h(G)` supplied by the caller.
pub fn annihilation_verdict_with_h(g: &Graph, a: VertexSet, h: usize) -> AnnihilationVerdict {
    let m = g.m();
    let deg_sum = g.degree_sum(a);
    let is_annihilating = deg_sum <= m;
    let is_maximal = is_annihilating && g.vertices().difference(a).iter().all(|v| deg_sum + g.degree(v) > m);
    let is_maximum = is_annihilating && a.len() == h;
    AnnihilationVerdict { is_annihilating, is_maximal, is_maximum, deg_sum }
}

/// Every vertex set of size `h(G)` whose degree total is at most `m(G)`.
pub fn enumerate_maximum_annihilating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > ANNIHILATING_ENUMERATION_LIMIT {
        return Err(Error::Unsupported(format!(
            "annihilating-set enumeration for n = {n} (limit {ANNIHILATING_ENUMERATION_LIMIT})"
        )));
    }
    let h = annihilation_number(g) as u32;
    let m = g.m();
    Ok((0u64..1 << n)
        .filter(|&mask| mask.count_ones() == h)
        .map(VertexSet::from_bits)
        .filter(|&s| g.degree_sum(s) <= m)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[f64], theta: f64) -> ThresholdSequence {
        ThresholdSequence::new(values.to_vec(), theta).unwrap()
    }

    #[test]
    fn worked_sequence_example() {
        let d3 = seq(&[1.0, 2.0, 3.0, 4.0, 4.0], 3.0);
        assert_eq!(annihilation_number_of_sequence(&d3), 2);
        let d6 = seq(&[1.0, 2.0, 3.0, 4.0, 4.0], 6.0);
        assert_eq!(annihilation_number_of_sequence(&d6), 3);

        let a1 = subsequence_verdict(&d6, &[0, 1, 2]).unwrap();
        assert!(a1.is_maximum && a1.is_maximal);
        for four in [3, 4] {
            let a2 = subsequence_verdict(&d6, &[1, four]).unwrap();
            assert!(a2.is_annihilating && a2.is_maximal && !a2.is_maximum);
        }
        assert!(verify_maximum_implies_maximal(&d6).unwrap());
    }

    #[test]
    fn zero_and_negative_thresholds() {
        assert_eq!(annihilation_number_of_sequence(&seq(&[0.0, 0.0, 0.0], 0.0)), 3);
        assert!(verify_maximum_implies_maximal(&seq(&[0.0, 0.0], 0.0)).unwrap());
        assert_eq!(annihilation_number_of_sequence(&seq(&[1.0, 2.0], -1.0)), 0);
        assert_eq!(annihilation_number_of_sequence(&seq(&[-3.0, 1.0, 1.0, 2.0], -1.0)), 3);
        assert_eq!(annihilation_number_of_sequence(&seq(&[], 5.0)), 0);
    }

    #[test]
    fn sequence_constructor_rejects_unsorted() {
        assert_eq!(ThresholdSequence::new(vec![2.0, 1.0], 0.0), Err(Error::UnsortedSequence));
        assert_eq!(ThresholdSequence::new(vec![f64::NAN], 0.0), Err(Error::UnsortedSequence));
        assert_eq!(ThresholdSequence::from_unsorted(vec![2.0, 1.0], 0.0).unwrap().values(), &[1.0, 2.0]);
        assert!(verify_maximum_implies_maximal(&seq(&[0.0; 21], 0.0)).is_err());
    }

    #[test]
    fn graph_level_boundaries() {
        assert_eq!(annihilation_number(&Graph::empty(4).unwrap()), 4);
        let one_edge = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(annihilation_number(&one_edge), 3);
        assert_eq!(annihilation_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn complete_bipartite_sides() {
        // K_{4,2}: the big side is maximum, the small side maximal.
        let edges: Vec<_> = (0..4).flat_map(|a| (4..6).map(move |b| (a, b))).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        let big = annihilation_verdict(&g, VertexSet::from_bits(0b001111));
        let small = annihilation_verdict(&g, VertexSet::from_bits(0b110000));
        assert!(big.is_maximum && big.is_maximal);
        assert!(small.is_maximal && !small.is_maximum);
    }

    #[test]
    fn k2_maximum_annihilating_sets() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sets = enumerate_maximum_annihilating_sets(&k2).unwrap();
        assert_eq!(sets, vec![VertexSet::from_bits(1), VertexSet::from_bits(2)]);
        assert_eq!(degree_sum(&k2, VertexSet::empty()), 0);
    }
}
