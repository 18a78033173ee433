//! The acceptance suite: each check recomputes a published claim (or an
//! internal consistency property) and reports pass or fail together with
//! its running time and time limit.
//!
//! Checks that share work (the `n <= 7` universe, the full `n <= 8` scan)
//! go through a [`Suite`], which computes each shared piece once.

use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::annihilation::{
    annihilation_number, annihilation_number_of_sequence, annihilation_verdict, enumerate_maximum_annihilating_sets,
    subsequence_verdict, verify_maximum_implies_maximal, ThresholdSequence,
};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::families::{bipartite_even, names_to_set, Family};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::independence::{
    enumerate_maximum_independent_sets, independence_number, is_sumi_graph, sumi_tree_leaf_check,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::kegraph::{classify, Classification};
use crate::matching::{matching_number, maximum_matching, mu_bruteforce};
use crate::oracle::{alpha_bruteforce, annihilation_number_bruteforce};
use crate::scanner::{
    enumerate_graphs_up_to, enumerate_trees, graph_from_union_name, scan_enumerated, verify_alpha_le_2_classification,
    verify_disconnected_alpha3, ScanFilter, ScanReport, ALPHA_LE_2_KE, DISCONNECTED_ALPHA3_EQUAL,
    DISCONNECTED_ALPHA3_LESS,
};

/// Seed for every random input in the suite.
pub const SEED: u64 = 0x00A1_1E55;
/// Largest family parameter exercised.
pub const FAMILY_K_MAX: usize = 12;
/// Largest parameter for which the maximum independent sets are pinned.
pub const OMEGA_K_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_seconds: f64,
    pub limit_seconds: f64,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {:<34} {:>9.3}s / {:>6}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

/// Runs `body`, then fails the check if it took longer than `limit`.
fn timed(id: u8, name: &'static str, limit: Duration, body: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    let start = Instant::now();
    let (ok, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
    let elapsed = start.elapsed();
    let detail = if ok && elapsed > limit { format!("{detail}; over time limit") } else { detail };
    CheckResult {
        id,
        name,
        passed: ok && elapsed <= limit,
        detail,
        elapsed_seconds: elapsed.as_secs_f64(),
        limit_seconds: limit.as_secs_f64(),
    }
}

/// Every parameterized family instance with `k <= k_max`.
pub fn family_instances(k_max: usize) -> Result<Vec<(Family, usize, Graph)>> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for k in f.min_k()..=k_max {
            out.push((f, k, f.build(k)?));
        }
    }
    Ok(out)
}

/// `G(n, p)` on the given generator.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("n <= 64")
}

/// Shared inputs for the checks.
#[derive(Default)]
pub struct Suite {
    small: OnceLock<Vec<Graph>>,
    full_scan: OnceLock<ScanReport>,
}

impl Suite {
    pub fn new() -> Suite {
        Suite::default()
    }

    /// All graphs on at most 7 vertices up to isomorphism.
    pub fn small_universe(&self) -> &[Graph] {
        self.small.get_or_init(|| enumerate_graphs_up_to(7, false).expect("n <= 8"))
    }

    /// The conjecture scan over all graphs on at most 8 vertices.
    pub fn full_scan(&self) -> &ScanReport {
        self.full_scan
            .get_or_init(|| scan_enumerated(8, ScanFilter::default(), DEFAULT_ENUMERATION_BUDGET).expect("n <= 8"))
    }

    pub fn sequence_semantics(&self) -> CheckResult {
        timed(1, "sequence annihilation numbers", Duration::from_millis(1), || {
            let d = |theta| ThresholdSequence::new(vec![1.0, 2.0, 3.0, 4.0, 4.0], theta);
            let h3 = annihilation_number_of_sequence(&d(3.0)?);
            let h6 = annihilation_number_of_sequence(&d(6.0)?);
            let v = subsequence_verdict(&d(6.0)?, &[1, 3])?;
            let ok = h3 == 2 && h6 == 3 && v.is_maximal && !v.is_maximum;
            Ok((ok, format!("h(theta=3)={h3}, h(theta=6)={h6}, (2,4) maximal={} maximum={}", v.is_maximal, v.is_maximum)))
        })
    }

    pub fn maximum_implies_maximal(&self) -> CheckResult {
        timed(2, "maximum annihilating => maximal", Duration::from_secs(60), || {
            let mut violations = 0;
            let mut sets = 0;
            for g in self.small_universe() {
                for s in enumerate_maximum_annihilating_sets(g)? {
                    sets += 1;
                    if !annihilation_verdict(g, s).is_maximal {
                        violations += 1;
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            for _ in 0..200 {
                let len = rng.gen_range(0..=12);
                let values: Vec<f64> = (0..len).map(|_| rng.gen_range(0..=10) as f64).collect();
                let total: f64 = values.iter().sum();
                let theta = rng.gen_range(0..=total as i64 + 2) as f64;
                if !verify_maximum_implies_maximal(&ThresholdSequence::from_unsorted(values, theta)?)? {
                    violations += 1;
                }
            }
            Ok((
                violations == 0,
                format!("{} graphs, {sets} sets, 200 sequences, {violations} violations", self.small_universe().len()),
            ))
        })
    }

    pub fn annihilation_lower_bound(&self) -> CheckResult {
        timed(3, "h >= max(floor(n/2), alpha)", Duration::from_secs(60), || {
            let instances = family_instances(FAMILY_K_MAX)?;
            let graphs = self.small_universe().iter().chain(instances.iter().map(|(_, _, g)| g));
            let mut checked = 0;
            let mut violations = 0;
            for g in graphs {
                checked += 1;
                let h = annihilation_number(g);
                if h < (g.n() / 2).max(independence_number(g)) {
                    violations += 1;
                }
            }
            Ok((violations == 0, format!("{checked} graphs, {violations} violations")))
        })
    }

    pub fn forward_implication(&self) -> CheckResult {
        timed(4, "no forward violation, n <= 8", Duration::from_secs(600), || {
            let r = self.full_scan();
            let b = &r.buckets;
            let ok = b.forward_violation == 0 && r.errors.is_empty() && r.examined == 13_598;
            let mut detail = format!(
                "{} graphs: consistent {}, forward {}, converse {}, out of scope {}, errors {}",
                r.examined,
                b.consistent,
                b.forward_violation,
                b.converse_counterexample,
                b.out_of_scope,
                r.errors.len()
            );
            let mut violations: Vec<_> = r.witnesses(Classification::ForwardViolation).collect();
            violations.sort_by_key(|w| (w.report.n, w.report.m, w.graph6.clone()));
            for w in violations.iter().take(3) {
                let rep = &w.report;
                detail.push_str(&format!(
                    "; {} n={} alpha=h={} mu={} ke={}",
                    w.graph6, rep.n, rep.h, rep.mu, rep.is_ke
                ));
            }
            Ok((ok, detail))
        })
    }

    pub fn family_closed_forms(&self) -> CheckResult {
        timed(5, "family closed forms, k <= 12", Duration::from_secs(1), || {
            let mut mismatches = Vec::new();
            for (f, k, g) in family_instances(FAMILY_K_MAX)? {
                let cf = f.expected(k)?;
                let h = annihilation_number(&g);
                let expected_h = match cf.h {
                    Some(h) => h,
                    None => annihilation_number_bruteforce(&g),
                };
                let got = (g.n(), g.m(), independence_number(&g), h);
                if got != (cf.n, cf.m, cf.alpha, expected_h) {
                    mismatches.push(format!("{}({k}): got {got:?}", f.cli_name()));
                }
            }
            for f in [Family::SpiderOdd, Family::SpiderEven] {
                if !matches!(f.build(0), Err(Error::BadParameter(_))) {
                    mismatches.push(format!("{}(0) accepted", f.cli_name()));
                }
            }
            Ok((mismatches.is_empty(), if mismatches.is_empty() { "all exact".into() } else { mismatches.join("; ") }))
        })
    }

    pub fn omega_structure(&self) -> CheckResult {
        timed(6, "maximum independent set structure", Duration::from_secs(10), || {
            let mut problems = Vec::new();
            for f in [Family::BipartiteOdd, Family::KeEven, Family::KeOdd] {
                for k in 0..=OMEGA_K_MAX {
                    let g = f.build(k)?;
                    let got: Vec<VertexSet> = enumerate_maximum_independent_sets(&g)?.sets;
                    let want: Vec<VertexSet> =
                        f.expected_mis_names(k).unwrap_or_default().iter().map(|s| names_to_set(&g, s)).collect();
                    if got != want {
                        problems.push(format!("{}({k}): {} sets", f.cli_name(), got.len()));
                    }
                }
            }
            let g0 = bipartite_even(0)?;
            let mut got: Vec<VertexSet> = enumerate_maximum_independent_sets(&g0)?.sets;
            got.sort();
            let mut want: Vec<VertexSet> = Family::BipartiteEven
                .expected_mis_names(0)
                .unwrap_or_default()
                .iter()
                .map(|s| names_to_set(&g0, s))
                .collect();
            want.sort();
            if got != want {
                problems.push("bip-even(0) is not {A0, B0}".into());
            }
            for k in 0..=OMEGA_K_MAX {
                let g = bipartite_even(k)?;
                let a0 = names_to_set(&g, &["a1", "a2", "a3", "a4"].map(String::from));
                let b0 = names_to_set(&g, &["b1", "b2", "b3", "b4"].map(String::from));
                for s in enumerate_maximum_independent_sets(&g)?.sets {
                    let d = g.degree_sum(s);
                    let covers = s.intersection(a0) == a0 || s.intersection(b0) == b0;
                    if !(d == 2 * k + 11 || d == 2 * k + 12) || !covers {
                        problems.push(format!("bip-even({k}): {} has degree sum {d}", g.format_set(s)));
                    }
                }
            }
            Ok((problems.is_empty(), if problems.is_empty() { "all exact".into() } else { problems.join("; ") }))
        })
    }

    pub fn converse_counterexamples(&self) -> CheckResult {
        timed(7, "converse counterexamples", Duration::from_secs(600), || {
            let mut problems = Vec::new();
            let mut certified = 0;
            for (f, k, g) in family_instances(FAMILY_K_MAX)? {
                if k < f.counterexample_from() {
                    continue;
                }
                let r = classify(&g)?;
                if r.classification == Classification::ConverseCounterexample && r.alpha < r.h {
                    certified += 1;
                } else {
                    problems.push(format!("{}({k}) is {}", f.cli_name(), r.classification.as_str()));
                }
            }
            let scan = self.full_scan();
            let in_bucket: Vec<_> = scan
                .witnesses(Classification::ConverseCounterexample)
                .map(|w| decode_graph6(&w.graph6).and_then(|g| canonical_form(&g)))
                .collect::<Result<_>>()?;
            for (f, name) in [(Family::BipartiteEven, "bip-even(0)"), (Family::KeEven, "ke-even(0)")] {
                if !in_bucket.contains(&canonical_form(&f.build(0)?)?) {
                    problems.push(format!("{name} missing from the n = 8 scan"));
                }
            }
            Ok((
                problems.is_empty(),
                if problems.is_empty() {
                    format!("{certified} family instances; scan bucket holds {} graphs", in_bucket.len())
                } else {
                    problems.join("; ")
                },
            ))
        })
    }

    pub fn small_classifications(&self) -> CheckResult {
        timed(8, "alpha <= 2 and disconnected alpha = 3", Duration::from_secs(60), || {
            let a = verify_alpha_le_2_classification()?;
            let d = verify_disconnected_alpha3()?;
            let ok = a.passed && d.passed;
            let mut detail = format!(
                "alpha<=2: {}/{} graphs; alpha=3=h: {}/{}; alpha=3<h: {}/{}",
                a.lists[0].len(),
                ALPHA_LE_2_KE.len(),
                d.lists[0].len(),
                DISCONNECTED_ALPHA3_EQUAL.len(),
                d.lists[1].len(),
                DISCONNECTED_ALPHA3_LESS.len()
            );
            for extra in a.unexpected.iter().chain(&d.unexpected) {
                detail.push_str(&format!("; unexpected {extra}"));
            }
            for name in a.missing.iter().chain(&d.missing) {
                detail.push_str(&format!("; missing {name}"));
            }
            Ok((ok, detail))
        })
    }

    pub fn oracle_equivalence(&self) -> CheckResult {
        timed(9, "alpha, mu, h against brute force", Duration::from_secs(300), || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x9);
            let random: Vec<Graph> = (0..500)
                .map(|_| {
                    let n = rng.gen_range(1..=12);
                    let p = rng.gen_range(0.05..0.95);
                    random_graph(&mut rng, n, p)
                })
                .collect();
            let mut mismatches = 0;
            let mut checked = 0;
            for g in self.small_universe().iter().chain(&random) {
                checked += 1;
                let m = maximum_matching(g);
                let ok = independence_number(g) == alpha_bruteforce(g)
                    && m.is_valid_for(g)
                    && m.len() == mu_bruteforce(g)?
                    && annihilation_number(g) == annihilation_number_bruteforce(g);
                if !ok {
                    mismatches += 1;
                }
            }
            Ok((mismatches == 0, format!("{checked} graphs, {mismatches} mismatches")))
        })
    }

    pub fn sumi_trees(&self) -> CheckResult {
        timed(10, "leaf parity <=> SUMI on trees", Duration::from_secs(60), || {
            let mut mismatches = 0;
            let mut trees = 0;
            for n in 2..=9 {
                for t in enumerate_trees(n)? {
                    trees += 1;
                    if sumi_tree_leaf_check(&t)? != is_sumi_graph(&t)? {
                        mismatches += 1;
                    }
                }
            }
            Ok((mismatches == 0, format!("{trees} trees, {mismatches} mismatches")))
        })
    }

    pub fn codec_round_trip(&self) -> CheckResult {
        timed(11, "graph6 round trip", Duration::from_secs(60), || {
            let mut graphs: Vec<Graph> = enumerate_graphs_up_to(8, false)?;
            graphs.extend(family_instances(FAMILY_K_MAX)?.into_iter().map(|(_, _, g)| g.without_names()));
            for name in ALPHA_LE_2_KE.iter().chain(&DISCONNECTED_ALPHA3_EQUAL).chain(&DISCONNECTED_ALPHA3_LESS) {
                graphs.push(graph_from_union_name(name)?);
            }
            let mut failures = 0;
            for g in &graphs {
                let s = encode_graph6(g);
                match decode_graph6(&s) {
                    Ok(back) if back == *g && encode_graph6(&back) == s => {}
                    _ => failures += 1,
                }
            }
            for w in &self.full_scan().counterexamples {
                let back = decode_graph6(&w.graph6)?;
                if encode_graph6(&back) != w.graph6 {
                    failures += 1;
                }
            }
            Ok((failures == 0, format!("{} graphs, {failures} failures", graphs.len())))
        })
    }

    /// Number of checks; ids run from 1 to this.
    pub const CHECKS: u8 = 11;

    /// The check with the given id.
    pub fn run_one(&self, id: u8) -> Option<CheckResult> {
        Some(match id {
            1 => self.sequence_semantics(),
            2 => self.maximum_implies_maximal(),
            3 => self.annihilation_lower_bound(),
            4 => self.forward_implication(),
            5 => self.family_closed_forms(),
            6 => self.omega_structure(),
            7 => self.converse_counterexamples(),
            8 => self.small_classifications(),
            9 => self.oracle_equivalence(),
            10 => self.sumi_trees(),
            11 => self.codec_round_trip(),
            _ => return None,
        })
    }

    /// Every check, in numeric order.
    pub fn run_all(&self) -> Vec<CheckResult> {
        (1..=Self::CHECKS).filter_map(|id| self.run_one(id)).collect()
    }
}

/// Gallai-type bounds `floor(n/2) + 1 <= alpha + mu <= n <= alpha + 2 mu`
/// for `n >= 1`.
pub fn gallai_sandwich_holds(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let (a, m) = (independence_number(g), matching_number(g));
    n / 2 < a + m && a + m <= n && n <= a + 2 * m
}
