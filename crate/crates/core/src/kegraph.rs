//! König-Egerváry test, the two conjecture conditions and per-graph
//! classification.
//!
//! Condition (i) is `alpha = h`; condition (ii) is "KE and every maximum
//! independent set is a maximal annihilating set". Verdicts are only drawn
//! for graphs with `h >= n/2`, compared exactly as `2h >= n`.

use serde::Serialize;

use crate::annihilation::{annihilation_number, annihilation_verdict_with_h};
use crate::error::Result;
use crate::graph::{DegreeSequence, Graph, VertexSet};
use crate::independence::{
    enumerate_maximum_independent_sets_with_budget, independence_number, DEFAULT_ENUMERATION_BUDGET,
};
use crate::matching::matching_number;

/// Which bucket a graph falls into with respect to the conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Consistent,
    ForwardViolation,
    ConverseCounterexample,
    OutOfScope,
}

impl Classification {
    pub const ALL: [Classification; 4] = [
        Classification::Consistent,
        Classification::ForwardViolation,
        Classification::ConverseCounterexample,
        Classification::OutOfScope,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Consistent => "consistent",
            Classification::ForwardViolation => "forward_violation",
            Classification::ConverseCounterexample => "converse_counterexample",
            Classification::OutOfScope => "out_of_scope",
        }
    }

    /// The bucket implied by the scope flag and the two conditions.
    pub fn from_conditions(in_scope: bool, condition_i: bool, condition_ii: bool) -> Classification {
        match (in_scope, condition_i, condition_ii) {
            (false, _, _) => Classification::OutOfScope,
            (true, true, false) => Classification::ForwardViolation,
            (true, false, true) => Classification::ConverseCounterexample,
            _ => Classification::Consistent,
        }
    }
}

/// Annihilation flags for one maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MisAnnotation {
    pub set: VertexSet,
    pub deg_sum: usize,
    pub is_annihilating: bool,
    pub is_maximal: bool,
    pub is_maximum: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub degree_sequence: DegreeSequence,
    pub alpha: usize,
    pub mu: usize,
    pub h: usize,
    pub is_bipartite: bool,
    pub is_ke: bool,
    pub in_conjecture_scope: bool,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub mis_annotations: Vec<MisAnnotation>,
    pub classification: Classification,
}

impl AnalysisReport {
    pub fn every_mis_maximal(&self) -> bool {
        self.mis_annotations.iter().all(|a| a.is_maximal)
    }

    pub fn every_mis_maximum(&self) -> bool {
        self.mis_annotations.iter().all(|a| a.is_maximum)
    }

    pub fn no_mis_maximal(&self) -> bool {
        self.mis_annotations.iter().all(|a| !a.is_maximal)
    }
}

pub fn is_koenig_egervary(g: &Graph) -> bool {
    independence_number(g) + matching_number(g) == g.n()
}

/// `h >= n/2`, without rounding.
pub fn in_conjecture_scope(g: &Graph) -> bool {
    2 * annihilation_number(g) >= g.n()
}

pub fn condition_i(g: &Graph) -> bool {
    independence_number(g) == annihilation_number(g)
}

pub fn condition_ii(g: &Graph) -> Result<bool> {
    if !is_koenig_egervary(g) {
        return Ok(false);
    }
    Ok(classify(g)?.condition_ii)
}

pub fn classify(g: &Graph) -> Result<AnalysisReport> {
    classify_with_budget(g, DEFAULT_ENUMERATION_BUDGET)
}

/// Full report; fails only when more than `budget` maximum independent sets
/// would have to be enumerated.
pub fn classify_with_budget(g: &Graph, budget: usize) -> Result<AnalysisReport> {
    let n = g.n();
    let family = enumerate_maximum_independent_sets_with_budget(g, budget)?;
    let alpha = family.alpha;
    let mu = matching_number(g);
    let h = annihilation_number(g);
    let is_ke = alpha + mu == n;
    let in_scope = 2 * h >= n;

    let mut sets = family.sets;
    sets.sort();
    let mis_annotations: Vec<MisAnnotation> = sets
        .into_iter()
        .map(|set| {
            let v = annihilation_verdict_with_h(g, set, h);
            MisAnnotation {
                set,
                deg_sum: v.deg_sum,
                is_annihilating: v.is_annihilating,
                is_maximal: v.is_maximal,
                is_maximum: v.is_maximum,
            }
        })
        .collect();

    let condition_i = alpha == h;
    let condition_ii = is_ke && mis_annotations.iter().all(|a| a.is_maximal);
    Ok(AnalysisReport {
        n,
        m: g.m(),
        degree_sequence: g.degree_sequence(),
        alpha,
        mu,
        h,
        is_bipartite: g.is_bipartite(),
        is_ke,
        in_conjecture_scope: in_scope,
        condition_i,
        condition_ii,
        mis_annotations,
        classification: Classification::from_conditions(in_scope, condition_i, condition_ii),
    })
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
    fn five_cycle_is_out_of_scope_and_not_ke() {
        let r = classify(&cycle(5)).unwrap();
        assert!(!r.is_ke);
        assert_eq!(r.h, 2);
        assert!(!r.in_conjecture_scope);
        assert_eq!(r.classification, Classification::OutOfScope);
    }

    #[test]
    fn four_cycle_is_ke() {
        assert!(is_koenig_egervary(&cycle(4)));
        assert!(condition_ii(&cycle(4)).unwrap());
        assert!(condition_i(&cycle(4)));
    }

    #[test]
    fn single_vertex() {
        let r = classify(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((r.alpha, r.mu, r.h), (1, 0, 1));
        assert!(r.is_ke && r.condition_i && r.condition_ii);
        assert_eq!(r.classification, Classification::Consistent);
    }

    #[test]
    fn empty_graph_is_consistent() {
        let r = classify(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!((r.alpha, r.mu, r.h), (0, 0, 0));
        assert_eq!(r.classification, Classification::Consistent);
    }

    #[test]
    fn classification_table() {
        use Classification::*;
        assert_eq!(Classification::from_conditions(false, true, false), OutOfScope);
        assert_eq!(Classification::from_conditions(true, true, false), ForwardViolation);
        assert_eq!(Classification::from_conditions(true, false, true), ConverseCounterexample);
        assert_eq!(Classification::from_conditions(true, true, true), Consistent);
        assert_eq!(Classification::from_conditions(true, false, false), Consistent);
    }

    #[test]
    fn budget_error_propagates() {
        assert!(classify_with_budget(&cycle(8), 1).is_err());
    }
}
