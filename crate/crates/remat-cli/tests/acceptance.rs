//! The acceptance gate. One test per criterion; each prints a single
//! PASS line once every assert in it has held, so a full run reads as a
//! checklist. Criteria 1 through 7 drive the library directly, criterion 8
//! exercises the installed binary end to end.

use std::process::{Command, Output};
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use remat::connectivity::{brute_force_vertex_connectivity, has_connectivity, vertex_connectivity};
use remat::enumerate::{enumerate_connected_graphs, is_isomorphic, EnumFilter};
use remat::finders::{
    find_half_delta_matching, find_one_removable_minhalf, find_removable_2matching,
    FinderOutcome, SearchBudget,
};
use remat::graph;
use remat::graph6::{parse_graph6, write_graph6};
use remat::matching::max_matching_size;
use remat::oracle::max_removable_matching;
use remat::structure::{mader_property_audit, minimally_k_connected_reduction};
use remat::verify::{empirical_f, verify_theorem, SweepParams, VerificationReport};
use remat::{Graph, Matching};

/// Every connected graph up to eight vertices, one representative per
/// isomorphism class, shared across criteria.
fn pool() -> &'static [Graph] {
    static POOL: OnceLock<Vec<Graph>> = OnceLock::new();
    POOL.get_or_init(|| {
        (1..=8)
            .flat_map(|n| enumerate_connected_graphs(n, &EnumFilter::default()).unwrap())
            .collect()
    })
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn pass(criterion: usize, what: &str) {
    println!("acceptance criterion {criterion} ({what}): PASS");
}

fn oracle_r(g: &Graph, k: usize) -> usize {
    let result = max_removable_matching(g, k, &budget()).unwrap();
    assert!(result.exhaustive, "oracle budget too small for {}", write_graph6(g));
    result.r
}

fn certified(g: &Graph, k: usize, m: &Matching) -> bool {
    g.delete_matching(m)
        .map(|h| has_connectivity(&h, k))
        .unwrap_or(false)
}

#[test]
fn criterion_1_connectivity_matches_brute_force() {
    let mut checked = 0;
    for g in pool().iter().filter(|g| g.n() <= 7) {
        assert_eq!(
            vertex_connectivity(g).unwrap(),
            brute_force_vertex_connectivity(g).unwrap(),
            "kappa mismatch on {}",
            write_graph6(g)
        );
        checked += 1;
    }
    assert_eq!(checked, 996);
    pass(1, "vertex connectivity equals brute force on all 996 classes to n = 7");
}

/// Largest removable matching by sheer enumeration: every subset of the
/// edge list is tested for being a matching, then for survivable deletion.
fn naive_r(g: &Graph, k: usize) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..(1u32 << edges.len()) {
        let mut covered = 0u64;
        let mut picked = Vec::new();
        let mut is_matching = true;
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if covered & e.endpoint_mask() != 0 {
                    is_matching = false;
                    break;
                }
                covered |= e.endpoint_mask();
                picked.push(*e);
            }
        }
        if !is_matching || picked.len() <= best {
            continue;
        }
        if has_connectivity(&g.delete_edges(&picked).unwrap(), k) {
            best = picked.len();
        }
    }
    best
}

#[test]
fn criterion_2_oracle_agrees_with_naive_enumeration() {
    let mut compared = 0;
    for g in pool().iter().filter(|g| g.n() <= 6) {
        for k in 1..=3 {
            if !has_connectivity(g, k) {
                continue;
            }
            assert_eq!(
                oracle_r(g, k),
                naive_r(g, k),
                "oracle disagrees on {} at k = {k}",
                write_graph6(g)
            );
            compared += 1;
        }
    }
    assert!(compared > 200);
    pass(2, "branch-and-bound oracle equals all-matchings maximum to n = 6");
}

#[test]
fn criterion_3_exceptional_values_are_exact() {
    for n in 3..=9 {
        assert_eq!(oracle_r(&graph::cycle(n), 1), 1, "r_1(C_{n})");
    }
    assert_eq!(oracle_r(&graph::complete(5), 2), 2);
    assert_eq!(oracle_r(&graph::complete(7), 3), 3);
    assert_eq!(max_matching_size(&graph::complete_bipartite(3, 5)).unwrap(), 3);
    assert_eq!(max_matching_size(&graph::complete_bipartite(4, 9 - 4)).unwrap(), 4);
    pass(3, "r_1(C_n) = 1, r_2(K5) = 2, r_3(K7) = 3, and the K_{delta,n-delta} matchings");
}

fn sweep(theorem: &str, k: usize, delta: usize, n_min: usize, n_max: usize) -> VerificationReport {
    let params = SweepParams {
        k,
        delta,
        n_min,
        n_max,
    };
    let report = verify_theorem(theorem, &params, pool(), &budget()).unwrap();
    assert_eq!(
        report.graphs_checked,
        report.passes + report.exceptions_matched + report.counterexamples.len(),
        "report arithmetic broken for {theorem} at k = {k}"
    );
    assert!(report.graphs_checked > 0, "empty sweep for {theorem} at k = {k}");
    report
}

fn assert_clean(report: &VerificationReport, expected_exceptions: usize) {
    assert_eq!(
        report.counterexamples,
        Vec::<String>::new(),
        "counterexamples against {} at k = {}",
        report.theorem_id,
        report.k
    );
    assert_eq!(
        report.exceptions_matched, expected_exceptions,
        "exception tally off for {} at k = {}",
        report.theorem_id, report.k
    );
}

#[test]
fn criterion_4_theorem_suites_are_clean_through_n_eight() {
    for k in 1..=3 {
        assert_clean(&sweep("halin", k, 0, 1, 8), 0);
    }
    for k in 1..=2 {
        assert_clean(&sweep("ckl", k, 0, 1, 8), 0);
    }
    // the k = 1 exceptions are exactly the six cycles C3..C8
    assert_clean(&sweep("two-matching", 1, 0, 1, 8), 6);
    assert_clean(&sweep("two-matching", 2, 0, 1, 8), 0);
    assert_clean(&sweep("two-matching", 3, 0, 1, 8), 0);
    // cycles again, plus the even-degree complete graphs K5 and K7
    assert_clean(&sweep("half-delta", 1, 0, 1, 8), 8);
    assert_clean(&sweep("half-delta", 2, 0, 1, 8), 2);
    assert_clean(&sweep("half-delta", 3, 0, 1, 8), 1);
    assert_clean(&sweep("one-delta", 1, 3, 6, 8), 0);
    assert_clean(&sweep("half-n-min", 1, 0, 1, 8), 0);
    assert_clean(&sweep("two-near-delta", 2, 5, 6, 8), 0);
    pass(4, "seven theorem suites, zero counterexamples, exceptions exact");
}

#[test]
fn criterion_5_reduction_cores_pass_the_mader_audit() {
    let mut audited = 0;
    for k in 2..=3 {
        for g in pool().iter().filter(|g| g.n() <= 7) {
            if !has_connectivity(g, k) {
                continue;
            }
            let reduction = minimally_k_connected_reduction(g, k).unwrap();
            mader_property_audit(&reduction.core, k).unwrap_or_else(|e| {
                panic!("audit failed on the core of {}: {e}", write_graph6(g))
            });
            audited += 1;
        }
    }
    assert!(audited > 500);
    pass(5, "every 2- and 3-connected core to n = 7 passes all four clauses");
}

#[test]
fn criterion_6_empirical_f_tables_reproduce_the_paper_values() {
    let f12 = empirical_f(1, 2, 6, pool(), &budget()).unwrap();
    assert_eq!(f12.lower_observed, 1);
    assert_eq!((f12.paper_bounds.lower, f12.paper_bounds.upper), (1, 1));

    let f13 = empirical_f(1, 3, 8, pool(), &budget()).unwrap();
    assert_eq!(f13.lower_observed, 3);
    assert_eq!((f13.paper_bounds.lower, f13.paper_bounds.upper), (3, 3));

    let f23 = empirical_f(2, 3, 8, pool(), &budget()).unwrap();
    assert_eq!(f23.lower_observed, 2);
    let wheel = graph::wheel(6);
    assert!(
        f23.witnesses
            .iter()
            .any(|w| is_isomorphic(&parse_graph6(w).unwrap(), &wheel).unwrap()),
        "no wheel among the f(2,3) minimizers {:?}",
        f23.witnesses
    );

    // n > 8 lives outside the built-in enumeration, so the f(2,5) family is
    // a curated stream: the complete-bipartite upper-bound witnesses and two
    // complete graphs.
    let family = vec![
        graph::complete_bipartite(5, 5),
        graph::complete_bipartite(5, 6),
        graph::complete_bipartite(5, 7),
        graph::complete(10),
        graph::complete(11),
    ];
    let f25 = empirical_f(2, 5, 12, &family, &budget()).unwrap();
    assert!(
        (2..=5).contains(&f25.lower_observed),
        "f(2,5) observed {} outside [2,5]",
        f25.lower_observed
    );
    assert!(f25.lower_observed >= f25.paper_bounds.lower);
    assert_eq!((f25.paper_bounds.lower, f25.paper_bounds.upper), (3, 5));
    pass(6, "f tables give 1, 3, 2-with-wheel, and an f(2,5) inside [2,5]");
}

#[test]
fn criterion_7_finders_never_beat_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d41_5443);
    let sample: Vec<&Graph> = pool().choose_multiple(&mut rng, 200).collect();
    assert_eq!(sample.len(), 200);
    let mut finder_runs = 0;
    for g in sample {
        let delta = g.min_degree();
        for k in 1..=3 {
            if !has_connectivity(g, k) {
                continue;
            }
            let r = oracle_r(g, k);
            let mut outcomes = Vec::new();
            if delta > k {
                outcomes.push(find_removable_2matching(g, k, &budget()).unwrap());
            }
            if delta >= if k == 3 { 5 } else { k + 1 } {
                outcomes.push(find_half_delta_matching(g, k, &budget()).unwrap());
            }
            if k == 1 && delta >= 3 {
                outcomes.push(find_one_removable_minhalf(g, &budget()).unwrap());
            }
            for outcome in outcomes {
                if let FinderOutcome::Matching(m) = outcome {
                    assert!(certified(g, k, &m), "uncertified matching on {}", write_graph6(g));
                    assert!(
                        m.len() <= r,
                        "finder beat the oracle on {} at k = {k}",
                        write_graph6(g)
                    );
                    finder_runs += 1;
                }
            }
        }
    }
    assert!(finder_runs > 100);
    pass(7, "200-graph sample: finders certified and bounded by the oracle");
}

fn remat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_remat"))
        .args(args)
        .env_remove("REMAT_BUDGET_NODES")
        .env_remove("REMAT_BUDGET_MS")
        .output()
        .expect("the remat binary runs")
}

fn exit(out: &Output) -> i32 {
    out.status.code().expect("exit code, not a signal")
}

fn report_of(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.trim()).expect("a single JSON report")
}

fn arithmetic_holds(report: &Value) -> bool {
    report["graphs_checked"].as_u64().unwrap()
        == report["passes"].as_u64().unwrap()
            + report["exceptions_matched"].as_u64().unwrap()
            + report["counterexamples"].as_array().unwrap().len() as u64
}

#[test]
fn criterion_8_hunts_terminate_and_exit_codes_hold() {
    // Closed regime: the half-n-min theorem implies the k = 1 conjecture,
    // so the hunt must come back empty.
    let closed = remat(&[
        "hunt",
        "--conjecture",
        "con:half-n-min",
        "--k",
        "1",
        "--n",
        "8",
        "--no-timing",
    ]);
    assert_eq!(exit(&closed), 0);
    let closed_report = report_of(&closed);
    assert!(arithmetic_holds(&closed_report));
    assert_eq!(closed_report["counterexamples"].as_array().unwrap().len(), 0);

    // Open regime: the run must terminate inside the default budget, and
    // anything it flags must survive an independent oracle maximization.
    let open = remat(&[
        "hunt",
        "--conjecture",
        "con:matching",
        "--k",
        "3",
        "--delta",
        "4",
        "--n",
        "8",
        "--no-timing",
    ]);
    let code = exit(&open);
    assert!(code == 0 || code == 3, "unexpected exit {code}");
    let open_report = report_of(&open);
    assert!(arithmetic_holds(&open_report));
    for word in open_report["counterexamples"].as_array().unwrap() {
        let g = parse_graph6(word.as_str().unwrap()).unwrap();
        let target = (g.min_degree() + 1).div_ceil(2);
        let revalidated = max_removable_matching(&g, 3, &budget()).unwrap();
        assert!(revalidated.exhaustive);
        assert!(
            revalidated.r < target,
            "flagged graph {} is not a counterexample",
            word
        );
    }

    assert_eq!(exit(&remat(&["verify", "--theorem", "nope", "--n", "5"])), 1);
    assert_eq!(exit(&remat(&["fkd", "--k", "2", "--delta", "2", "--n", "6"])), 2);
    let starved = remat(&[
        "hunt",
        "--conjecture",
        "con:matching",
        "--k",
        "3",
        "--delta",
        "4",
        "--n",
        "7",
        "--budget-nodes",
        "1",
    ]);
    assert_eq!(exit(&starved), 4);
    pass(8, "hunts terminate, flags revalidate, exit codes 1/2/4 in place");
}
