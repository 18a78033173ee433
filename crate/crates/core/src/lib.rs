//! Annihilation numbers, König-Egerváry tests and conjecture scanning for
//! small graphs.
//!
//! Graphs are simple, undirected and stored as `u64` adjacency rows, so every
//! graph has at most 64 vertices. The exact algorithms are exponential in the
//! worst case and are meant for the sizes that exhaustive scans reach.
//!
//! ```
//! use annihilator::{classify, decode_graph6, Classification};
//!
//! let c5 = decode_graph6("Dhc").unwrap();
//! let report = classify(&c5).unwrap();
//! assert_eq!((report.alpha, report.mu, report.h), (2, 2, 2));
//! assert_eq!(report.classification, Classification::OutOfScope);
//! ```

pub mod annihilation;
pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod kegraph;
pub mod matching;
pub mod oracle;
pub mod scanner;
pub mod verify;

pub use annihilation::{
    annihilation_number, annihilation_number_of_sequence, annihilation_verdict, degree_sum,
    enumerate_maximum_annihilating_sets, subsequence_verdict, verify_maximum_implies_maximal, AnnihilationVerdict,
    SubsequenceVerdict, ThresholdSequence,
};
pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec, Standard};
pub use graph::{graph_from_edges, Bipartition, DegreeSequence, Graph, VertexSet, MAX_VERTICES};
pub use graph6::{decode_graph6, encode_graph6};
pub use independence::{
    enumerate_maximum_independent_sets, enumerate_maximum_independent_sets_with_budget, independence_number,
    is_independent, is_independent_vertex_cover, is_sumi_graph, sumi_tree_leaf_check, MaximumIndependentFamily,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use kegraph::{
    classify, classify_with_budget, condition_i, condition_ii, in_conjecture_scope, is_koenig_egervary,
    AnalysisReport, Classification, MisAnnotation,
};
pub use matching::{has_perfect_matching, matching_number, maximum_matching, mu_bruteforce, Matching};
pub use scanner::{
    enumerate_graphs, enumerate_trees, scan, scan_alpha3_connected, scan_enumerated, scan_graph6_reader,
    verify_alpha_le_2_classification, verify_disconnected_alpha3, ScanFilter, ScanReport,
};
