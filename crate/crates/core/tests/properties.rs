use annihilator::oracle::{
    alpha_bruteforce, annihilation_number_bruteforce, canonical_code_bruteforce, has_odd_cycle_bruteforce,
    maximum_independent_sets_bruteforce,
};
use annihilator::verify::gallai_sandwich_holds;
use annihilator::{
    annihilation_number, annihilation_number_of_sequence, canonical_form, classify, decode_graph6, encode_graph6,
    enumerate_maximum_independent_sets, independence_number, matching_number, maximum_matching, mu_bruteforce,
    verify_maximum_implies_maximal, Classification, Graph, ThresholdSequence,
};
use proptest::collection::vec;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        let text = encode_graph6(&g);
        let back = decode_graph6(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(encode_graph6(&back), text);
    }

    #[test]
    fn degree_sum_is_twice_the_size(g in graph(16)) {
        prop_assert_eq!(g.degree_sequence().sum(), 2 * g.m());
    }

    #[test]
    fn invariants_match_brute_force(g in graph(10)) {
        prop_assert_eq!(independence_number(&g), alpha_bruteforce(&g));
        prop_assert_eq!(matching_number(&g), mu_bruteforce(&g).unwrap());
        prop_assert_eq!(annihilation_number(&g), annihilation_number_bruteforce(&g));
        prop_assert!(maximum_matching(&g).is_valid_for(&g));
    }

    #[test]
    fn maximum_independent_sets_match_brute_force(g in graph(10)) {
        let mut fast: Vec<Vec<usize>> =
            enumerate_maximum_independent_sets(&g).unwrap().sets.iter().map(|s| s.to_vec()).collect();
        fast.sort();
        let mut slow = maximum_independent_sets_bruteforce(&g);
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn bipartite_iff_no_odd_cycle(g in graph(8)) {
        prop_assert_eq!(g.is_bipartite(), !has_odd_cycle_bruteforce(&g));
    }

    #[test]
    fn gallai_sandwich(g in graph(14)) {
        prop_assert!(gallai_sandwich_holds(&g));
    }

    #[test]
    fn alpha_never_exceeds_h(g in graph(14)) {
        prop_assert!(independence_number(&g) <= annihilation_number(&g));
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant((g, perm) in graph_with_permutation(10)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn isolated_vertices_shift_alpha_and_h((g, q) in (graph(10), 1usize..4)) {
        let bigger = Graph::empty(q).unwrap().disjoint_union(&g).unwrap();
        prop_assert_eq!(annihilation_number(&bigger), annihilation_number(&g) + q);
        prop_assert_eq!(independence_number(&bigger), independence_number(&g) + q);
        prop_assert_eq!(matching_number(&bigger), matching_number(&g));
    }

    /// Independent sets are annihilating, so alpha = h makes every maximum
    /// independent set a maximum and hence maximal annihilating set.
    #[test]
    fn alpha_equal_h_forces_maximal_annihilating(g in graph(12)) {
        let r = classify(&g).unwrap();
        if r.condition_i {
            prop_assert!(r.every_mis_maximal() && r.every_mis_maximum());
        }
        prop_assert!(r.mis_annotations.iter().all(|a| a.is_annihilating));
    }

    #[test]
    fn classification_agrees_with_its_fields(g in graph(12)) {
        let r = classify(&g).unwrap();
        prop_assert_eq!(r.in_conjecture_scope, 2 * r.h >= r.n);
        prop_assert_eq!(r.is_ke, r.alpha + r.mu == r.n);
        prop_assert_eq!(r.condition_ii, r.is_ke && r.every_mis_maximal());
        let expected = Classification::from_conditions(r.in_conjecture_scope, r.condition_i, r.condition_ii);
        prop_assert_eq!(r.classification, expected);
    }

    #[test]
    fn sequence_maximum_annihilating_is_maximal(
        (values, theta) in (vec(-5i32..20, 0..12), -10i32..60)
    ) {
        let d = ThresholdSequence::from_unsorted(values.iter().map(|&v| v as f64).collect(), theta as f64).unwrap();
        prop_assert!(annihilation_number_of_sequence(&d) <= d.len());
        if values.iter().all(|&v| v >= 0) {
            prop_assert!(verify_maximum_implies_maximal(&d).unwrap());
        }
    }
}

#[test]
fn canonical_form_agrees_with_brute_force_on_every_relabeling() {
    // Exhaustive over a handful of small graphs: all n! relabelings give the
    // same canonical form, and distinct brute-force codes give distinct forms.
    let graphs = annihilator::enumerate_graphs(5, false).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for g in &graphs {
        let form = canonical_form(g).unwrap();
        annihilator::oracle::for_each_permutation(g.n(), |p| {
            assert_eq!(canonical_form(&g.permute(p)).unwrap(), form);
        });
        assert!(seen.insert(canonical_code_bruteforce(g)));
    }
}
